#include <catch2/catch_amalgamated.hpp>

#include <bit>
#include <vector>

#include "clonekit/boolfn.hpp"

using namespace clonekit;

namespace {

// Definitions recoded directly from first principles; the library predicates
// are tested against these on every function of arity <= 3.
bool brute_monotone(const bool_fn& f) {
    int n = 1 << f.arity;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if ((a & b) == a && eval_index(f, a) > eval_index(f, b)) return false;
    return true;
}

bool brute_self_dual(const bool_fn& f) {
    int n = 1 << f.arity;
    for (int a = 0; a < n; ++a)
        if (eval_index(f, a) == eval_index(f, (n - 1) ^ a)) return false;
    return true;
}

bool brute_linear(const bool_fn& f) {
    // try all affine forms over the variables
    for (int c0 = 0; c0 <= 1; ++c0)
        for (unsigned coeffs = 0; coeffs < (1u << f.arity); ++coeffs) {
            bool ok = true;
            for (int i = 0; i < (1 << f.arity) && ok; ++i) {
                int v = c0;
                for (int k = 0; k < f.arity; ++k)
                    if ((coeffs >> k) & 1) v ^= (i >> k) & 1;
                if (v != eval_index(f, i)) ok = false;
            }
            if (ok) return true;
        }
    return false;
}

bool brute_separating_deg(const bool_fn& f, int a, int deg) {
    // every subset of the a-preimage of size <= deg shares a coordinate fixed at a
    std::vector<int> pre;
    for (int i = 0; i < (1 << f.arity); ++i)
        if (eval_index(f, i) == a) pre.push_back(i);
    int m = static_cast<int>(pre.size());
    for (unsigned sub = 1; sub < (1u << m); ++sub) {
        if (std::popcount(sub) > deg) continue;
        unsigned shared = (1u << f.arity) - 1;
        for (int j = 0; j < m; ++j)
            if ((sub >> j) & 1) {
                unsigned coords = a ? static_cast<unsigned>(pre[j])
                                    : ~static_cast<unsigned>(pre[j]) & ((1u << f.arity) - 1);
                shared &= coords;
            }
        if (shared == 0) return false;
    }
    return true;
}

} // namespace

TEST_CASE("make validates and constructs") {
    auto id = make_fn(1, std::vector<int>{0, 1});
    CHECK(id == named("id"));
    CHECK(is_projection(id));

    auto conj = make_fn(2, std::vector<int>{0, 0, 0, 1});
    CHECK(conj == named("and"));

    auto parity = make_fn(2, std::vector<int>{0, 1, 1, 0});
    CHECK(parity == named("xor"));

    CHECK_THROWS_AS(make_fn(0, std::vector<int>{1}), error);
    CHECK_THROWS_AS(make_fn(2, std::vector<int>{0, 1}), error);
    CHECK_THROWS_AS(make_fn(7, 0ull), error);
}

TEST_CASE("named catalog matches defining formulas") {
    // maj(x,y,z) = (x&y)|(y&z)|(x&z)
    auto m = named("maj");
    for (int i = 0; i < 8; ++i) {
        int x = i & 1, y = (i >> 1) & 1, z = (i >> 2) & 1;
        CHECK(eval_index(m, i) == ((x & y) | (y & z) | (x & z)));
    }
    CHECK(threshold_fn(3, 2) == m);   // threshold(3,2) and maj agree on all 8 inputs

    CHECK(named("top") == make_fn(1, std::vector<int>{1, 1}));
    CHECK(named("bot").table == 0);

    // aimp = x & (y -> z), oxor = x | (y ^ z)
    for (int i = 0; i < 8; ++i) {
        int x = i & 1, y = (i >> 1) & 1, z = (i >> 2) & 1;
        CHECK(eval_index(named("aimp"), i) == (x & (!y | z)));
        CHECK(eval_index(named("oxor"), i) == (x | (y ^ z)));
        CHECK(eval_index(named("or_and3"), i) == (x | (y & z)));
        CHECK(eval_index(named("and_or3"), i) == (x & (y | z)));
        CHECK(eval_index(named("or_nimp3"), i) == (x | (y & !z)));
        CHECK(eval_index(named("and_eq3"), i) == (x & (y == z)));
        CHECK(eval_index(named("maj_n"), i) == ((x & y) | (y & !z) | (x & !z)));
        CHECK(eval_index(named("maj_nn"), i) == ((x & !y) | (!y & !z) | (x & !z)));
        CHECK(eval_index(named("xnor3"), i) == (1 ^ x ^ y ^ z));
    }

    CHECK_THROWS_AS(named("nand"), error);
    CHECK_THROWS_AS(threshold_fn(2, 3), error);
}

TEST_CASE("threshold endpoints are disjunction and conjunction") {
    for (int n = 2; n <= 5; ++n) {
        auto disj = threshold_fn(n, 1);
        auto conj = threshold_fn(n, n);
        for (int i = 0; i < (1 << n); ++i) {
            CHECK(eval_index(disj, i) == (i != 0 ? 1 : 0));
            CHECK(eval_index(conj, i) == (i == (1 << n) - 1 ? 1 : 0));
        }
    }
}

TEST_CASE("eval on argument tuples") {
    CHECK(eval(named("nimp"), {1, 0}) == 1);
    CHECK(eval(named("xor3"), {1, 1, 1}) == 1);
    CHECK(eval(named("aimp"), {1, 1, 0}) == 0);
    CHECK_THROWS_AS(eval(named("and"), {1}), error);
}

TEST_CASE("property predicates against brute-force definitions") {
    for (int arity = 1; arity <= 3; ++arity) {
        for (std::uint64_t t = 0; t <= table_mask(arity); ++t) {
            bool_fn f{arity, t};
            CHECK(is_monotone(f) == brute_monotone(f));
            CHECK(is_self_dual(f) == brute_self_dual(f));
            CHECK(is_linear(f) == brute_linear(f));
            for (int deg = 2; deg <= 4; ++deg) {
                CHECK(has_property(f, {prop_tag::bot_separating_deg, deg}) ==
                      brute_separating_deg(f, 0, deg));
                CHECK(has_property(f, {prop_tag::top_separating_deg, deg}) ==
                      brute_separating_deg(f, 1, deg));
            }
        }
    }
}

TEST_CASE("named property examples") {
    CHECK(has_property(named("and"), {prop_tag::monotone, {}}));
    CHECK(has_property(named("nimp"), {prop_tag::top_separating_deg, 2}));
    CHECK_FALSE(has_property(named("xor"), {prop_tag::monotone, {}}));
}

TEST_CASE("duality pairs") {
    for (int arity = 1; arity <= 3; ++arity)
        for (std::uint64_t t = 0; t <= table_mask(arity); ++t) {
            bool_fn f{arity, t};
            bool_fn g = dual(f);
            CHECK(dual(g) == f);
            CHECK(has_property(f, {prop_tag::bot_reproducing, {}}) ==
                  has_property(g, {prop_tag::top_reproducing, {}}));
            auto s0 = separation_degree(f, 0);
            auto s1 = separation_degree(g, 1);
            CHECK(s0.k == s1.k);
            if (s0.k == sep_degree::kind::finite) CHECK(s0.value == s1.value);
        }
}

TEST_CASE("separation degrees") {
    auto inf = sep_degree::kind::infinite;
    auto none = sep_degree::kind::none;

    CHECK(separation_degree(named("imp"), 0).k == inf);
    auto t32 = separation_degree(threshold_fn(3, 2), 1);
    REQUIRE(t32.k == sep_degree::kind::finite);
    CHECK(t32.value == 2);
    CHECK(separation_degree(named("xor"), 0).k == none);

    // mirror side
    auto n2 = separation_degree(named("nimp"), 1);
    CHECK(n2.k == inf);

    // threshold T_{n+1,2} is bot-separating of degree exactly n
    for (int n = 2; n <= 5; ++n) {
        auto d = separation_degree(threshold_fn(n + 1, 2), 0);
        REQUIRE(d.k == sep_degree::kind::finite);
        CHECK(d.value == n);
    }

    // infinite degree implies every finite degree
    auto f = named("imp");
    for (int k = 2; k <= 4; ++k)
        CHECK(has_property(f, {prop_tag::bot_separating_deg, k}));

    // functions whose preimage misses the shared coordinate entirely
    CHECK(separation_degree(named("not"), 0).k == none);
    bool_fn nand{2, 0x7};
    CHECK(separation_degree(nand, 0).k == none);
}

TEST_CASE("function literals round-trip") {
    CHECK(print_fn_literal(named("and")) == "2:8");
    CHECK(parse_fn_literal("2:8") == named("and"));
    for (std::uint64_t t = 0; t <= table_mask(3); ++t) {
        bool_fn f{3, t};
        CHECK(parse_fn_literal(print_fn_literal(f)) == f);
    }
    CHECK_THROWS_AS(parse_fn_literal("2-8"), error);
    CHECK_THROWS_AS(parse_fn_literal("9:ff"), error);
}
