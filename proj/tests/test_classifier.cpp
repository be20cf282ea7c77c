#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "clonekit/classifier.hpp"

using namespace clonekit;

namespace {

basis B(std::initializer_list<std::string> names) { return basis(names); }

verdict vp(problem p, std::initializer_list<std::string> names) {
    return classify_prop(p, B(names));
}

} // namespace

TEST_CASE("satisfiability dichotomy") {
    auto v = vp(problem::sat, {"nimp"});
    CHECK(v.cls == cclass::np);
    CHECK(v.comp == completeness::complete);

    CHECK(vp(problem::sat, {"and", "or", "top", "bot"}).cls == cclass::ptime);
    CHECK(vp(problem::sat, {"and", "not"}).cls == cclass::np);
    CHECK(vp(problem::sat, {"xor", "top"}).cls == cclass::ptime);
}

TEST_CASE("refined satisfiability classification") {
    CHECK(vp(problem::sat_fine, {"and", "or", "top", "bot"}).cls == cclass::ptime);
    CHECK(vp(problem::sat_fine, {"and", "or", "top", "bot"}).comp == completeness::complete);
    CHECK(vp(problem::sat_fine, {"maj", "not"}).cls == cclass::logspace);
    CHECK(vp(problem::sat_fine, {"and", "top", "bot"}).cls == cclass::nl);
    CHECK(vp(problem::sat_fine, {"xor", "top", "bot"}).cls == cclass::parity_l);
    CHECK(vp(problem::sat_fine, {"nimp"}).cls == cclass::np);
    CHECK_FALSE(vp(problem::sat_fine, {"nimp"}).note.empty());   // representation caveat
}

TEST_CASE("tautology, counting, implication") {
    CHECK(vp(problem::taut, {"imp"}).cls == cclass::conp);
    CHECK(vp(problem::taut, {"xor"}).cls == cclass::ptime);

    auto c = vp(problem::count, {"maj", "not"});
    CHECK(c.cls == cclass::ptime);
    CHECK(c.comp == completeness::exact);
    CHECK(vp(problem::count, {"eq"}).cls == cclass::sharp_p);
    CHECK(vp(problem::count, {"xor", "bot"}).cls == cclass::ptime);

    auto i = vp(problem::implication, {"xor"});
    CHECK(i.cls == cclass::parity_l);
    CHECK(i.comp == completeness::complete);
    CHECK(vp(problem::implication, {"maj"}).cls == cclass::conp);
    CHECK(vp(problem::implication, {"not"}).cls == cclass::ac0_2);
    CHECK(vp(problem::implication, {"and"}).cls == cclass::ac0);
}

TEST_CASE("equivalence, isomorphism, evaluation, minimization, expressibility") {
    CHECK(vp(problem::equivalence, {"maj"}).cls == cclass::conp);
    CHECK(vp(problem::equivalence, {"not", "bot"}).cls == cclass::ac0_2);
    CHECK(vp(problem::equivalence, {"not", "bot"}).comp == completeness::complete);
    CHECK(vp(problem::equivalence, {"xor"}).cls == cclass::ac0);

    CHECK(vp(problem::isomorphism, {"and", "top", "bot"}).cls == cclass::logspace);
    auto iso = vp(problem::isomorphism, {"nimp"});
    CHECK(iso.cls == cclass::conp);
    CHECK(iso.comp == completeness::hard_only);

    CHECK(vp(problem::evaluation_tree, {"top", "bot"}).cls == cclass::constant_time);
    CHECK(vp(problem::evaluation_tree, {"or", "top", "bot"}).cls == cclass::nlogtime);
    CHECK(vp(problem::evaluation_tree, {"and", "top", "bot"}).cls == cclass::conlogtime);
    CHECK(vp(problem::evaluation_tree, {"xor", "top", "bot"}).cls == cclass::mod2);
    CHECK(vp(problem::evaluation_tree, {"and", "or", "top", "bot"}).cls == cclass::nc1);
    CHECK_FALSE(vp(problem::evaluation_tree, {"and"}).note.empty());

    CHECK(vp(problem::minimization, {"xor", "top", "bot"}).cls == cclass::ptime);
    auto mini = vp(problem::minimization, {"and", "or"});
    CHECK(mini.cls == cclass::conp);
    CHECK(mini.comp == completeness::hard_only);

    CHECK(vp(problem::expressibility, {"and", "xor"}).cls == cclass::ptime);
    CHECK(vp(problem::expressibility, {"or"}).cls == cclass::np);
}

TEST_CASE("teachability and learnability verdicts") {
    CHECK(vp(problem::unique_char_finite, {"and", "or"}).cls == cclass::yes);
    CHECK(vp(problem::unique_char_finite, {"xor3"}).cls == cclass::no);
    CHECK(vp(problem::unique_char_poly, {"and", "top"}).cls == cclass::yes);
    CHECK(vp(problem::unique_char_poly, {"and", "or"}).cls == cclass::no);
    CHECK(vp(problem::learn_mq, {"xor", "top"}).cls == cclass::yes);
    CHECK(vp(problem::learn_mq, {"maj"}).cls == cclass::no);
}

TEST_CASE("modal consistency classification") {
    auto v = classify_modal(problem::modal_consistency, {true, true}, B({"and"}), "K");
    CHECK(v.cls == cclass::conp);
    CHECK(v.comp == completeness::complete);

    CHECK(classify_modal(problem::modal_consistency, {true, false}, B({"nimp"}), "K").cls ==
          cclass::pspace);
    CHECK(classify_modal(problem::modal_consistency, {true, true},
                         B({"and_or3", "bot"}), "K").cls == cclass::pspace);
    CHECK(classify_modal(problem::modal_consistency, {true, false}, B({"and"}), "K").cls ==
          cclass::ptime);
    CHECK(classify_modal(problem::modal_consistency, {true, true},
                         B({"and", "top", "bot"}), "K").cls == cclass::conp);

    // non-K logics ship as Open; the affine region carries the gap note
    auto open_affine =
        classify_modal(problem::modal_consistency, {true, true}, B({"xor"}), "S4");
    CHECK(open_affine.cls == cclass::open);
    CHECK(open_affine.note == "open affine gap");
    auto open_other =
        classify_modal(problem::modal_consistency, {true, false}, B({"and"}), "T");
    CHECK(open_other.cls == cclass::open);
    CHECK(open_other.note != "open affine gap");

    CHECK_THROWS_AS(classify_modal(problem::modal_consistency, {false, false},
                                   B({"and"}), "K"),
                    error);
    CHECK_THROWS_AS(classify_modal(problem::modal_consistency, {true, true},
                                   B({"and"}), "GL"),
                    error);
}

TEST_CASE("TBox satisfiability classification") {
    auto e = classify_modal(problem::tbox_sat, {true, false},
                            B({"or", "top", "bot"}), "K_omega");
    CHECK(e.cls == cclass::exptime);
    CHECK(e.comp == completeness::complete);

    CHECK(classify_modal(problem::tbox_sat, {false, false},
                         B({"and", "or", "top", "bot"}), "K_omega").cls == cclass::np);
    CHECK(classify_modal(problem::tbox_sat, {false, false}, B({"xnor3"}), "K_omega").cls ==
          cclass::np);
    CHECK(classify_modal(problem::tbox_sat, {false, false}, B({"not"}), "K_omega").cls ==
          cclass::nl);
    CHECK(classify_modal(problem::tbox_sat, {false, true},
                         B({"and", "top", "bot"}), "K_omega").cls == cclass::exptime);
    CHECK(classify_modal(problem::tbox_sat, {false, true},
                         B({"or", "top", "bot"}), "K_omega").cls == cclass::ptime);
    CHECK(classify_modal(problem::tbox_sat, {true, true}, B({"top", "bot"}), "K_omega").cls ==
          cclass::exptime);
    CHECK(classify_modal(problem::tbox_sat, {true, false}, B({"and"}), "K_omega").cls ==
          cclass::trivial);
    CHECK_THROWS_AS(classify_modal(problem::tbox_sat, {true, false}, B({"and"}), "K"),
                    error);
}

TEST_CASE("modal teachability dichotomy") {
    CHECK(classify_modal(problem::modal_teachability, {true, true},
                         B({"and", "or"}), "K").cls == cclass::yes);
    CHECK(classify_modal(problem::modal_teachability, {true, false},
                         B({"and", "or", "top", "bot"}), "K").cls == cclass::yes);
    CHECK(classify_modal(problem::modal_teachability, {true, true},
                         B({"not", "top"}), "K").cls == cclass::yes);
    CHECK(classify_modal(problem::modal_teachability, {true, true},
                         B({"and", "bot"}), "K").cls == cclass::no);
    CHECK(classify_modal(problem::modal_teachability, {true, true},
                         B({"or", "top"}), "K").cls == cclass::no);
    CHECK(classify_modal(problem::modal_teachability, {true, true},
                         B({"and", "or", "top", "bot"}), "K").cls == cclass::no);
    CHECK_THROWS_AS(classify_modal(problem::modal_teachability, {true, true},
                                   B({"and"}), "S4"),
                    error);
}

TEST_CASE("basis invariance") {
    // two different bases for BF
    auto a = classify_prop(problem::sat, B({"and", "not"}));
    auto b = classify_prop(problem::sat, B({"nimp", "top"}));
    CHECK(a.cls == b.cls);
    CHECK(a.citation == b.citation);

    // two different bases for the affine clone
    auto c = classify_prop(problem::count, B({"xor", "top"}));
    auto d = classify_prop(problem::count, B({"eq", "bot"}));
    CHECK(c.cls == d.cls);
}

TEST_CASE("hardness is upward closed along containment for SAT") {
    std::mt19937 rng(2718281);
    for (int trial = 0; trial < 30; ++trial) {
        basis small;
        int count = 1 + static_cast<int>(rng() % 2);
        for (int i = 0; i < count; ++i) {
            int arity = 1 + static_cast<int>(rng() % 3);
            small.add(bool_fn{arity, rng() & table_mask(arity)});
        }
        basis large = small;
        int arity = 1 + static_cast<int>(rng() % 3);
        large.add(bool_fn{arity, rng() & table_mask(arity)});
        if (classify_prop(problem::sat, small).cls == cclass::np)
            CHECK(classify_prop(problem::sat, large).cls == cclass::np);
    }
}

TEST_CASE("problem names round-trip") {
    CHECK(parse_problem("SAT") == problem::sat);
    CHECK(parse_problem("MODAL_CONSISTENCY") == problem::modal_consistency);
    CHECK_THROWS_AS(parse_problem("FROBNICATE"), error);
    CHECK_THROWS_AS(classify_prop(problem::tbox_sat, B({"and"})), error);
    CHECK_THROWS_AS(classify_modal(problem::sat, {true, false}, B({"and"}), "K"), error);
}
