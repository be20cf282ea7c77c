#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clonekit/formula.hpp"

namespace clonekit {

// ---------------------------------------------------------------------------
// Expressibility
// ---------------------------------------------------------------------------

// Is f equivalent to a formula over O? Depends only on the truth table, so it
// is invariant under replacing the input with any equivalent formula.
inline bool expressible(const formula_ptr& f, const basis& O,
                        const config& cfg = default_config()) {
    auto fv = vars(f);
    if (fv.empty()) fv.push_back("p");
    expect(static_cast<int>(fv.size()) <= cfg.arity_cap, errc::arity_out_of_range,
           "too many variables for truth-table expressibility");
    return member(truth_table(f, fv, cfg), O, cfg);
}

// ---------------------------------------------------------------------------
// Satisfiability with per-clone dispatch
// ---------------------------------------------------------------------------

struct sat_result {
    bool satisfiable;
    std::optional<assignment> witness;
    std::string method;   // affine | self-dual | monotone | top-reproducing | brute
};

namespace detail {

inline assignment const_assignment(const std::vector<std::string>& vs, int bit) {
    assignment a;
    for (const auto& v : vs) a[v] = bit;
    return a;
}

struct affine_form {
    int c0;
    std::vector<std::string> coeffs;   // variables with coefficient 1, sorted
};

// Recover c0 + sum of coefficients by n+1 evaluations; exact whenever the
// formula's basis sits inside the affine clone.
inline affine_form extract_affine(const formula_ptr& f, const std::vector<std::string>& vs) {
    affine_form out;
    auto zero = const_assignment(vs, 0);
    out.c0 = evaluate(f, zero);
    for (const auto& v : vs) {
        assignment unit = zero;
        unit[v] = 1;
        if (evaluate(f, unit) != out.c0) out.coeffs.push_back(v);
    }
    return out;
}

} // namespace detail

// Dispatch priority over the tractable families is affine, self-dual,
// monotone, top-reproducing, then exhaustive search; the answer is the same
// whenever several apply.
inline sat_result solve_sat(const formula_ptr& f, const basis& B,
                            const config& cfg = default_config()) {
    auto vs = vars(f);
    named_clone c = identify(B, cfg);
    auto below = [&](clone_family fam) { return contains(clone_of(fam), c, cfg); };

    if (vs.empty())   // constant formulas still carry a dummy variable in practice
        vs.push_back("p");

    if (below(clone_family::L)) {
        auto form = detail::extract_affine(f, vs);
        if (form.c0 == 1) return {true, detail::const_assignment(vs, 0), "affine"};
        if (!form.coeffs.empty()) {
            auto a = detail::const_assignment(vs, 0);
            a[form.coeffs.front()] = 1;
            return {true, a, "affine"};
        }
        return {false, std::nullopt, "affine"};
    }
    if (below(clone_family::D)) {
        auto top = detail::const_assignment(vs, 1);
        if (evaluate(f, top)) return {true, top, "self-dual"};
        auto bottom = detail::const_assignment(vs, 0);
        expect(evaluate(f, bottom) == 1, errc::internal_inconsistency,
               "self-dual formula false on both constant assignments");
        return {true, bottom, "self-dual"};
    }
    if (below(clone_family::M)) {
        auto top = detail::const_assignment(vs, 1);
        if (evaluate(f, top)) return {true, top, "monotone"};
        return {false, std::nullopt, "monotone"};
    }
    if (below(clone_family::R1)) {
        auto top = detail::const_assignment(vs, 1);
        expect(evaluate(f, top) == 1, errc::internal_inconsistency,
               "top-reproducing formula false on the all-true assignment");
        return {true, top, "top-reproducing"};
    }

    expect(static_cast<int>(vs.size()) <= cfg.brute_var_cap, errc::too_many_variables,
           "brute-force search refused beyond " + std::to_string(cfg.brute_var_cap) +
               " variables");
    int n = static_cast<int>(vs.size());
    for (std::uint64_t i = 0; i < (1ull << n); ++i) {
        assignment a;
        for (int k = 0; k < n; ++k) a[vs[k]] = (i >> k) & 1;
        if (evaluate(f, a)) return {true, a, "brute"};
    }
    return {false, std::nullopt, "brute"};
}

// ---------------------------------------------------------------------------
// Model counting with per-clone dispatch
// ---------------------------------------------------------------------------

inline std::uint64_t count_models(const formula_ptr& f, const basis& B,
                                  const std::vector<std::string>& props,
                                  const config& cfg = default_config()) {
    auto fv = vars(f);
    for (const auto& v : fv)
        expect(std::find(props.begin(), props.end(), v) != props.end(),
               errc::unbound_variable, "formula variable '" + v + "' not among props");
    int n = static_cast<int>(props.size());
    expect(n >= 1, errc::bad_input, "need at least one declared variable");

    named_clone c = identify(B, cfg);
    auto below = [&](clone_family fam) { return contains(clone_of(fam), c, cfg); };

    if (below(clone_family::E)) {
        // equivalent to bot, top, or a conjunction over a variable set S
        auto top = detail::const_assignment(props, 1);
        if (!evaluate(f, top)) return 0;
        int fixed = 0;
        for (const auto& v : props) {
            assignment a = top;
            a[v] = 0;
            if (!evaluate(f, a)) ++fixed;
        }
        return 1ull << (n - fixed);
    }
    if (below(clone_family::V)) {
        auto zero = detail::const_assignment(props, 0);
        if (evaluate(f, zero)) return 1ull << n;   // top-like
        int members = 0;
        for (const auto& v : props) {
            assignment a = zero;
            a[v] = 1;
            if (evaluate(f, a)) ++members;
        }
        if (members == 0) return 0;   // bot-like
        return (1ull << n) - (1ull << (n - members));
    }
    if (below(clone_family::L)) {
        auto form = detail::extract_affine(f, props);
        if (form.coeffs.empty()) return form.c0 ? (1ull << n) : 0;
        return 1ull << (n - 1);
    }
    if (below(clone_family::D)) {
        // self-duality pairs each assignment with its complement
        return 1ull << (n - 1);
    }

    expect(n <= cfg.brute_var_cap, errc::too_many_variables,
           "brute-force count refused beyond " + std::to_string(cfg.brute_var_cap) +
               " variables");
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < (1ull << n); ++i) {
        assignment a;
        for (int k = 0; k < n; ++k) a[props[k]] = (i >> k) & 1;
        count += evaluate(f, a);
    }
    return count;
}

} // namespace clonekit
