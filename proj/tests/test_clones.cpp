#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "clonekit/clones.hpp"
#include "support/naive_closure.hpp"

using namespace clonekit;

namespace {

basis B(std::initializer_list<std::string> names) { return basis(names); }

} // namespace

TEST_CASE("closure basics") {
    auto two_proj = close_at_arity(basis{}, 2);
    CHECK(two_proj.size() == 2);
    CHECK(std::find(two_proj.begin(), two_proj.end(), arg_mask(2, 1)) != two_proj.end());
    CHECK(std::find(two_proj.begin(), two_proj.end(), arg_mask(2, 2)) != two_proj.end());

    auto nimp1 = close_at_arity(B({"nimp"}), 1);
    CHECK(nimp1 == std::vector<std::uint64_t>{0x0, 0x2});   // const-bot and identity

    CHECK(close_at_arity(B({"and", "not"}), 2).size() == 16);
    CHECK_THROWS_AS(close_at_arity(basis{}, 0), error);
}

TEST_CASE("closure budget aborts runaway growth") {
    config small = default_config();
    small.closure_budget = 10;
    CHECK_THROWS_AS(close_at_arity(B({"and", "not"}), 2, small), error);
}

TEST_CASE("closure idempotence and monotonicity") {
    auto as_basis = [](const std::vector<std::uint64_t>& fns, int n) {
        basis b;
        for (auto t : fns) b.add(bool_fn{n, t});
        return b;
    };
    for (auto names : {B({"nimp"}), B({"and", "or"}), B({"xor3"})}) {
        auto once = close_at_arity(names, 3);
        auto twice = close_at_arity(as_basis(once, 3), 3);
        CHECK(once == twice);
    }
    auto sub = close_at_arity(B({"and"}), 3);
    auto super = close_at_arity(B({"and", "or"}), 3);
    CHECK(std::includes(super.begin(), super.end(), sub.begin(), sub.end()));
}

TEST_CASE("closure preserves Post invariants on random bases") {
    std::mt19937 rng(20240817);
    std::vector<post_property> props = {
        {prop_tag::bot_reproducing, {}}, {prop_tag::top_reproducing, {}},
        {prop_tag::monotone, {}},        {prop_tag::self_dual, {}},
        {prop_tag::linear, {}},          {prop_tag::bot_separating_deg, 2},
        {prop_tag::top_separating_deg, 2}};
    for (int trial = 0; trial < 25; ++trial) {
        basis b;
        int count = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < count; ++i) {
            int arity = 1 + static_cast<int>(rng() % 3);
            b.add(bool_fn{arity, rng() & table_mask(arity)});
        }
        auto closed = close_at_arity(b, 3);
        for (const auto& p : props) {
            bool all = true;
            for (const auto& e : b.entries)
                if (!has_property(e.fn, p)) { all = false; break; }
            if (!all) continue;
            for (auto t : closed) CHECK(has_property(bool_fn{3, t}, p));
        }
    }
}

TEST_CASE("member agrees with naive closure oracle") {
    std::mt19937 rng(987654);
    for (int trial = 0; trial < 40; ++trial) {
        basis b;
        int count = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < count; ++i) {
            int arity = 1 + static_cast<int>(rng() % 3);
            b.add(bool_fn{arity, rng() & table_mask(arity)});
        }
        int arity = 1 + static_cast<int>(rng() % 3);
        bool_fn f{arity, rng() & table_mask(arity)};
        CHECK(member(f, b) == testing::naive_member(f, b));
    }
}

TEST_CASE("member examples") {
    CHECK(member(named("and"), B({"nimp"})));
    CHECK_FALSE(member(named("not"), B({"and", "or", "top", "bot"})));
    CHECK(member(projection(2, 2), B({"xor3"})));
    CHECK(member(projection(2, 2), basis{}));
}

TEST_CASE("leq examples") {
    CHECK(leq(B({"maj"}), B({"and", "or"})));
    CHECK_FALSE(leq(B({"xor"}), B({"and", "or", "top", "bot"})));
    CHECK(leq(B({"aimp"}), B({"aimp"})));
}

TEST_CASE("identify examples") {
    CHECK(identify(B({"nimp"})) == clone_of(clone_family::S1));
    CHECK(identify(B({"and", "not"})) == clone_of(clone_family::BF));
    CHECK(identify(basis{}) == clone_of(clone_family::I2));
    CHECK(identify(B({"imp"})) == clone_of(clone_family::S0));
    CHECK(identify(B({"maj"})) == clone_of(clone_family::D2));
    CHECK(identify(B({"and", "or"})) == clone_of(clone_family::M2));
    CHECK(identify(B({"xor", "top"})) == clone_of(clone_family::L));
    CHECK(identify(B({"not"})) == clone_of(clone_family::N2));
    CHECK(identify(B({"maj", "not"})) == clone_of(clone_family::D));
    basis t42;
    t42.add(threshold_fn(4, 2), "T4_2");
    CHECK(identify(t42) == clone_of(clone_family::S00n, 3));
}

TEST_CASE("identify respects the degree cap") {
    config tight = default_config();
    tight.degree_cap = 2;
    basis t42;
    t42.add(threshold_fn(4, 2));
    CHECK_THROWS_AS(identify(t42, tight), error);
}

TEST_CASE("base_of examples") {
    auto d2 = base_of(clone_of(clone_family::D2));
    REQUIRE(d2.size() == 1);
    CHECK(d2.entries[0].fn == named("maj"));

    auto s00_3 = base_of(clone_of(clone_family::S00n, 3));
    REQUIRE(s00_3.size() == 1);
    CHECK(s00_3.entries[0].fn == threshold_fn(4, 2));

    auto l2 = base_of(clone_of(clone_family::L2));
    REQUIRE(l2.size() == 1);
    CHECK(l2.entries[0].fn == named("xor3"));

    CHECK_THROWS_AS(base_of(clone_of(clone_family::S0n, 9)), error);
}

TEST_CASE("round trip identify(base_of(c)) at the degree cap") {
    for (const auto& c : all_clones(default_config().degree_cap))
        CHECK(identify(base_of(c)) == c);
}

TEST_CASE("containment examples") {
    auto c = [](clone_family f) { return clone_of(f); };
    CHECK(contains(c(clone_family::BF), c(clone_family::L)));
    CHECK_FALSE(contains(c(clone_family::M), c(clone_family::D)));
    CHECK_FALSE(contains(c(clone_family::S0), c(clone_family::R1)));
    CHECK(contains(c(clone_family::R1), c(clone_family::S0)));
}

TEST_CASE("containment agrees with saturation on small bases") {
    // Cross-check the predicate route against honest saturation wherever every
    // base function has arity <= 3.
    auto cs = all_clones(2);
    std::map<std::string, std::vector<std::vector<std::uint64_t>>> closed;
    for (const auto& a : cs) {
        auto& slot = closed[clone_name(a)];
        slot.resize(4);
        for (int n = 1; n <= 3; ++n) slot[n] = close_at_arity(base_of(a), n);
    }
    for (const auto& a : cs)
        for (const auto& b : cs) {
            if (base_of(b).max_arity() > 3) continue;
            bool by_saturation = true;
            for (const auto& e : base_of(b).entries) {
                const auto& fns = closed[clone_name(a)][e.fn.arity];
                if (!std::binary_search(fns.begin(), fns.end(), e.fn.table))
                    by_saturation = false;
            }
            CHECK(contains(a, b) == by_saturation);
        }
}

TEST_CASE("contains is a partial order on the capped poset") {
    auto cs = all_clones(default_config().degree_cap);
    std::size_t n = cs.size();
    std::vector<std::vector<bool>> geq(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) geq[i][j] = contains(cs[i], cs[j]);
    for (std::size_t i = 0; i < n; ++i) CHECK(geq[i][i]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && geq[i][j]) CHECK_FALSE(geq[j][i]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!geq[i][j]) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (geq[j][k]) CHECK(geq[i][k]);
        }
}

TEST_CASE("join and meet") {
    auto e2 = clone_of(clone_family::E2);
    auto v2 = clone_of(clone_family::V2);
    CHECK(join_clones(e2, v2) == clone_of(clone_family::M2));
    CHECK(join_clones(v2, v2) == v2);

    // meet(M, L): by brute force, the monotone linear functions of arity <= 3
    // are exactly projections and constants.
    auto m = clone_of(clone_family::M);
    auto l = clone_of(clone_family::L);
    auto met = meet_clones(m, l);
    CHECK(met == clone_of(clone_family::I));
    std::set<std::uint64_t> both;
    for (std::uint64_t t = 0; t <= table_mask(3); ++t) {
        bool_fn f{3, t};
        if (is_monotone(f) && is_linear(f)) both.insert(t);
    }
    std::set<std::uint64_t> i_slice;
    for (std::uint64_t t = 0; t <= table_mask(3); ++t)
        if (clone_member(met, bool_fn{3, t})) i_slice.insert(t);
    CHECK(both == i_slice);

    CHECK(meet_clones(clone_of(clone_family::S0n, 2), clone_of(clone_family::S1n, 2)) ==
          clone_of(clone_family::D2));
}

TEST_CASE("absorption laws on sampled pairs") {
    std::vector<named_clone> sample = {
        clone_of(clone_family::M), clone_of(clone_family::L), clone_of(clone_family::D),
        clone_of(clone_family::V), clone_of(clone_family::E2), clone_of(clone_family::S1),
        clone_of(clone_family::R0), clone_of(clone_family::N), clone_of(clone_family::S00n, 2)};
    for (const auto& a : sample)
        for (const auto& b : sample) {
            CHECK(join_clones(a, meet_clones(a, b)) == a);
            CHECK(meet_clones(a, join_clones(a, b)) == a);
        }
}

TEST_CASE("downward closed membership") {
    std::vector<named_clone> ml = {clone_of(clone_family::M), clone_of(clone_family::L)};
    CHECK(in_downward_closed(ml, B({"xor"})));
    CHECK_FALSE(in_downward_closed({clone_of(clone_family::M)}, B({"not"})));
    CHECK(in_downward_closed({clone_of(clone_family::BF)}, B({"nimp", "eq"})));
}

TEST_CASE("clone names round-trip") {
    for (const auto& c : all_clones(5)) {
        CHECK(parse_clone_name(clone_name(c)) == c);
    }
    CHECK(clone_name(clone_of(clone_family::S00n, 3)) == "S00^3");
    CHECK(parse_clone_name("S00") == clone_of(clone_family::S00));
    CHECK_THROWS_AS(parse_clone_name("QX"), error);
    CHECK_THROWS_AS(parse_clone_name("S00n"), error);   // parameterized family needs a degree
}

TEST_CASE("lattice dot output") {
    config cap2 = default_config();
    cap2.degree_cap = 2;
    auto dot = lattice_dot(cap2);
    CHECK(dot == lattice_dot(cap2));   // byte-identical across runs
    CHECK(dot.find("\"BF\" -> \"R0\"") != std::string::npos);
    // 38 unparameterized families + 8 parameterized instances at degree 2
    CHECK(all_clones(2).size() == 46);
}
