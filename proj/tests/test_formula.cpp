#include <catch2/catch_amalgamated.hpp>

#include "clonekit/formula.hpp"

using namespace clonekit;

namespace {

basis B(std::initializer_list<std::string> names) { return basis(names); }

} // namespace

TEST_CASE("prefix application parsing") {
    auto f = parse("and(p,q)", B({"and"}));
    REQUIRE(f->k == formula::kind::apply);
    CHECK(f->conn.fn == named("and"));
    REQUIRE(f->args.size() == 2);
    CHECK(f->args[0]->name == "p");
    CHECK(f->args[1]->name == "q");

    auto g = parse("xor3(p,q,r)", B({"xor3"}));
    CHECK(g->args.size() == 3);
}

TEST_CASE("fragment discipline") {
    CHECK_THROWS_AS(parse("and(p,not(q))", B({"and"})), error);
    try {
        parse("and(p,not(q))", B({"and"}));
    } catch (const error& e) {
        CHECK(e.code() == errc::undeclared_connective);
        CHECK(std::string(e.what()).find("not") != std::string::npos);
    }
}

TEST_CASE("syntax errors carry positions") {
    try {
        parse("and(p,,q)", B({"and"}));
        FAIL("expected a syntax error");
    } catch (const error& e) {
        CHECK(e.code() == errc::syntax_error);
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
    CHECK_THROWS_AS(parse("and(p)", B({"and"})), error);
    CHECK_THROWS_AS(parse("(p", B({"and"})), error);
}

TEST_CASE("infix sugar and precedence") {
    // not > and > or > (xor, nimp) > (imp, eq), left-associative
    basis full({"and", "or", "not", "xor", "imp", "eq", "nimp", "top", "bot"});
    auto f = parse("!p & q | r", full);
    // ((!p & q) | r)
    REQUIRE(f->conn.fn == named("or"));
    CHECK(f->args[0]->conn.fn == named("and"));

    auto g = parse("p ^ q -> r", full);
    REQUIRE(g->conn.fn == named("imp"));
    CHECK(g->args[0]->conn.fn == named("xor"));

    auto h = parse("p -> q -> r", full);
    REQUIRE(h->conn.fn == named("imp"));
    CHECK(h->args[0]->conn.fn == named("imp"));   // left-associative

    auto k = parse("p -/> q", full);
    CHECK(k->conn.fn == named("nimp"));

    auto uni = parse("p ∧ q", full);
    CHECK(uni->conn.fn == named("and"));
}

TEST_CASE("round trip through the printer") {
    basis full({"and", "or", "not", "xor", "maj", "top"});
    for (const char* text : {"and(p,or(q,not(r)))", "maj(p,q,r)", "top(p)",
                             "xor(p,xor(q,r))"}) {
        auto f = parse(text, full);
        auto g = parse(print(f), full);
        CHECK(print(f) == print(g));
        CHECK(measure(f).tree == measure(g).tree);
    }
}

TEST_CASE("bare constants pick up a variable argument") {
    auto f = parse("top & p", B({"and", "top"}));
    REQUIRE(f->conn.fn == named("and"));
    CHECK(f->args[0]->conn.fn == named("top"));
    CHECK(f->args[0]->args[0]->name == "p");
    CHECK(vars(f) == std::vector<std::string>{"p"});
}

TEST_CASE("evaluation") {
    basis full({"and", "maj", "oxor"});
    CHECK(evaluate(parse("and(p,q)", full), {{"p", 1}, {"q", 1}}) == 1);
    CHECK(evaluate(parse("maj(p,q,r)", full), {{"p", 1}, {"q", 0}, {"r", 1}}) == 1);
    CHECK(evaluate(parse("oxor(p,q,r)", full), {{"p", 0}, {"q", 1}, {"r", 1}}) == 0);
    CHECK_THROWS_AS(evaluate(parse("and(p,q)", full), {{"p", 1}}), error);
}

TEST_CASE("measure") {
    basis full({"and", "xor"});
    CHECK(measure(formula::var("p")).tree == 1);
    CHECK(measure(formula::var("p")).dag == 1);

    auto pp = parse("and(p,p)", full);
    CHECK(measure(pp).tree == 3);
    CHECK(measure(pp).dag == 2);

    // xor chain phi_n: phi_1 = xor(p,p), phi_{k+1} = xor(phi_k, phi_k):
    // dag n+1, tree 2^{n+1}-1
    formula_ptr phi = parse("xor(p,p)", full);
    for (int n = 1; n < 3; ++n)
        phi = formula::apply({"xor", named("xor")}, {phi, phi});
    auto m = measure(phi);
    CHECK(m.dag == 4);
    CHECK(m.tree == 15);

    // structurally equal but unshared copies also collapse in dag size
    auto left = parse("and(p,q)", full);
    auto right = parse("and(p,q)", full);
    auto both = formula::apply({"and", named("and")}, {left, right});
    CHECK(measure(both).dag == 4);   // p, q, and(p,q), and(and(p,q),and(p,q))
    CHECK(measure(both).tree == 7);
}

TEST_CASE("measure stays exact on deep shared chains") {
    basis full({"xor"});
    formula_ptr phi = parse("xor(p,p)", full);
    for (int n = 1; n < 40; ++n)
        phi = formula::apply({"xor", named("xor")}, {phi, phi});
    auto m = measure(phi);
    CHECK(m.dag == 41);
    CHECK(m.tree == (std::uint64_t{1} << 41) - 1);
}

TEST_CASE("truth tables") {
    basis full({"and"});
    CHECK(truth_table(parse("p", full), {"p"}) == named("id"));
    CHECK(truth_table(parse("and(p,q)", full), {"p", "q"}) == named("and"));

    auto three = truth_table(parse("and(p,q)", full), {"p", "q", "r"});
    CHECK(three.arity == 3);
    for (unsigned i = 0; i < 8; ++i)
        CHECK(eval_index(three, i) == ((i & 1) && ((i >> 1) & 1) ? 1 : 0));

    CHECK_THROWS_AS(truth_table(parse("and(p,q)", full), {"p"}), error);
}
