#pragma once

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "clonekit/modal.hpp"
#include "clonekit/proplogic.hpp"

namespace clonekit {

// ---------------------------------------------------------------------------
// Labeled examples
// ---------------------------------------------------------------------------

struct labeled_example {
    enum class payload { prop, modal };
    payload kind;
    assignment v;        // for prop
    pointed_model pm;    // for modal
    int label;

    static labeled_example of(assignment a, int label) {
        return {payload::prop, std::move(a), {}, label};
    }
    static labeled_example of(pointed_model m, int label) {
        return {payload::modal, {}, std::move(m), label};
    }
};

using teaching_set = std::vector<labeled_example>;

inline bool fits(const formula_ptr& f, const labeled_example& ex) {
    expect(ex.kind == labeled_example::payload::prop, errc::kind_mismatch,
           "propositional formula against a modal example");
    return evaluate(f, ex.v) == ex.label;
}

inline bool fits(const mformula_ptr& f, const labeled_example& ex) {
    expect(ex.kind == labeled_example::payload::modal, errc::kind_mismatch,
           "modal formula against a propositional example");
    return mc(ex.pm, f) == ex.label;
}

inline void validate_example_frame(const labeled_example& ex, const std::string& logic) {
    if (ex.kind != labeled_example::payload::modal) return;
    expect(logic_catalog(logic).frame_ok(ex.pm.model), errc::bad_input,
           "example model is not a " + logic + " frame");
}

namespace detail {

inline assignment mask_assignment(const std::vector<std::string>& props, unsigned mask) {
    assignment a;
    for (std::size_t k = 0; k < props.size(); ++k) a[props[k]] = (mask >> k) & 1;
    return a;
}

inline unsigned assignment_mask(const std::vector<std::string>& props, const assignment& a) {
    unsigned m = 0;
    for (std::size_t k = 0; k < props.size(); ++k) {
        auto it = a.find(props[k]);
        expect(it != a.end(), errc::bad_input,
               "example assignment misses variable '" + props[k] + "'");
        if (it->second) m |= 1u << k;
    }
    return m;
}

inline formula_ptr fold_connective(const std::string& name,
                                   const std::vector<std::string>& vars_sorted,
                                   const std::string& fallback_var, bool empty_is_top) {
    if (vars_sorted.empty())
        return formula::apply({empty_is_top ? "top" : "bot",
                               named(empty_is_top ? "top" : "bot")},
                              {formula::var(fallback_var)});
    formula_ptr f = formula::var(vars_sorted.front());
    for (std::size_t i = 1; i < vars_sorted.size(); ++i)
        f = formula::apply({name, named(name)}, {f, formula::var(vars_sorted[i])});
    return f;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Propositional teaching sets
// ---------------------------------------------------------------------------

// Dispatch on the fragment clone: fragments inside N get the two-example
// characterizations, monotone fragments get one positive per prime implicant
// (minimal true point) and one negative per prime clause (maximal false
// point), affine fragments get the n+1 probe assignments labeled by the
// target. Everything else has no finite prop-indexed teaching sets here.
inline teaching_set teach_prop(const formula_ptr& f, const basis& fragment,
                               const std::vector<std::string>& props,
                               const config& cfg = default_config()) {
    expect(!props.empty() && static_cast<int>(props.size()) <= cfg.arity_cap,
           errc::prop_cap_exceeded, "prop set size outside 1..arity cap");
    bool_fn tt = truth_table(f, props, cfg);
    expect(member(tt, fragment, cfg), errc::not_in_fragment,
           "formula is not expressible in the declared fragment");
    named_clone c = identify(fragment, cfg);
    auto below = [&](clone_family fam) { return contains(clone_of(fam), c, cfg); };
    int n = static_cast<int>(props.size());
    unsigned full = (1u << n) - 1;
    teaching_set out;

    if (below(clone_family::N)) {
        auto add = [&](unsigned mask, int lab) {
            out.push_back(labeled_example::of(detail::mask_assignment(props, mask), lab));
        };
        if (tt.table == 0) { add(full, 0); add(0, 0); return out; }
        if (tt.table == table_mask(n)) { add(full, 1); add(0, 1); return out; }
        for (int k = 1; k <= n; ++k) {
            if (tt.table == arg_mask(n, k)) { add(1u << (k - 1), 1); add(0, 0); return out; }
            if (tt.table == (~arg_mask(n, k) & table_mask(n))) {
                add(1u << (k - 1), 0);
                add(0, 1);
                return out;
            }
        }
        fail(errc::internal_inconsistency, "N-fragment function not of the four shapes");
    }

    if (below(clone_family::M)) {
        for (unsigned i = 0; i <= full; ++i) {
            if (!eval_index(tt, i)) continue;
            bool minimal = true;
            for (int k = 0; k < n && minimal; ++k)
                if ((i >> k) & 1 && eval_index(tt, i & ~(1u << k))) minimal = false;
            if (minimal)
                out.push_back(labeled_example::of(detail::mask_assignment(props, i), 1));
        }
        for (unsigned i = 0; i <= full; ++i) {
            if (eval_index(tt, i)) continue;
            bool maximal = true;
            for (int k = 0; k < n && maximal; ++k)
                if (!((i >> k) & 1) && !eval_index(tt, i | (1u << k))) maximal = false;
            if (maximal)
                out.push_back(labeled_example::of(detail::mask_assignment(props, i), 0));
        }
        return out;
    }

    if (below(clone_family::L)) {
        auto add = [&](unsigned mask) {
            out.push_back(labeled_example::of(detail::mask_assignment(props, mask),
                                              eval_index(tt, mask)));
        };
        add(0);
        for (int k = 0; k < n; ++k) add(1u << k);
        return out;
    }

    fail(errc::fragment_not_teachable,
         "clone " + clone_name(c) + " admits no finite teaching sets over a prop set");
}

// ---------------------------------------------------------------------------
// Unique-characterization verification (the brute-force oracle)
// ---------------------------------------------------------------------------

struct unique_result {
    enum class status { unique, ambiguous, not_fitting };
    status st;
    std::optional<std::pair<bool_fn, bool_fn>> witnesses;   // for ambiguous
};

inline unique_result verify_unique(const formula_ptr& f, const teaching_set& examples,
                                   const basis& fragment,
                                   const std::vector<std::string>& props,
                                   const config& cfg = default_config()) {
    expect(!props.empty() && props.size() <= 4, errc::prop_cap_exceeded,
           "function enumeration is bounded at 4 variables");
    int n = static_cast<int>(props.size());
    bool_fn tt = truth_table(f, props, cfg);
    std::vector<unsigned> masks;
    std::vector<int> labels;
    for (const auto& ex : examples) {
        expect(ex.kind == labeled_example::payload::prop, errc::kind_mismatch,
               "modal example in a propositional teaching set");
        masks.push_back(detail::assignment_mask(props, ex.v));
        labels.push_back(ex.label);
    }
    auto fits_all = [&](std::uint64_t table) {
        for (std::size_t i = 0; i < masks.size(); ++i)
            if (static_cast<int>((table >> masks[i]) & 1) != labels[i]) return false;
        return true;
    };
    if (!fits_all(tt.table)) return {unique_result::status::not_fitting, std::nullopt};
    for (std::uint64_t t : close_at_arity(fragment, n, cfg)) {
        if (t == tt.table || !fits_all(t)) continue;
        return {unique_result::status::ambiguous,
                std::make_pair(tt, bool_fn{n, t})};
    }
    return {unique_result::status::unique, std::nullopt};
}

// ---------------------------------------------------------------------------
// Exact learning with membership queries
// ---------------------------------------------------------------------------

struct learn_result {
    formula_ptr hypothesis;
    int queries;
};

// Identifies any hidden function of the conjunction, disjunction or affine
// family with exactly |props|+1 membership queries.
inline learn_result learn_mq(const basis& fragment, const std::vector<std::string>& props,
                             const std::function<int(const assignment&)>& oracle,
                             const config& cfg = default_config()) {
    expect(!props.empty(), errc::bad_input, "need at least one variable");
    named_clone c = identify(fragment, cfg);
    auto below = [&](clone_family fam) { return contains(clone_of(fam), c, cfg); };
    int n = static_cast<int>(props.size());
    int queries = 0;
    auto ask = [&](unsigned mask) {
        ++queries;
        return oracle(detail::mask_assignment(props, mask)) ? 1 : 0;
    };
    unsigned full = (1u << n) - 1;

    if (below(clone_family::E)) {
        int top = ask(full);
        std::vector<int> flips(n);
        for (int k = 0; k < n; ++k) flips[k] = ask(full & ~(1u << k));
        if (top == 0) {
            for (int k = 0; k < n; ++k)
                expect(flips[k] == 0, errc::oracle_inconsistent,
                       "oracle claims a conjunction true below a false point");
            return {formula::apply({"bot", named("bot")}, {formula::var(props[0])}), queries};
        }
        std::vector<std::string> s;
        for (int k = 0; k < n; ++k)
            if (flips[k] == 0) s.push_back(props[k]);
        return {detail::fold_connective("and", s, props[0], true), queries};
    }
    if (below(clone_family::V)) {
        int zero = ask(0);
        std::vector<int> units(n);
        for (int k = 0; k < n; ++k) units[k] = ask(1u << k);
        if (zero == 1) {
            for (int k = 0; k < n; ++k)
                expect(units[k] == 1, errc::oracle_inconsistent,
                       "oracle claims a disjunction false above a true point");
            return {formula::apply({"top", named("top")}, {formula::var(props[0])}), queries};
        }
        std::vector<std::string> s;
        for (int k = 0; k < n; ++k)
            if (units[k] == 1) s.push_back(props[k]);
        if (s.empty())
            return {formula::apply({"bot", named("bot")}, {formula::var(props[0])}), queries};
        return {detail::fold_connective("or", s, props[0], false), queries};
    }
    if (below(clone_family::L)) {
        int c0 = ask(0);
        std::vector<std::string> coeffs;
        for (int k = 0; k < n; ++k)
            if (ask(1u << k) != c0) coeffs.push_back(props[k]);
        formula_ptr h;
        if (coeffs.empty()) {
            h = formula::apply({c0 ? "top" : "bot", named(c0 ? "top" : "bot")},
                               {formula::var(props[0])});
        } else {
            h = c0 ? formula::apply({"top", named("top")}, {formula::var(props[0])})
                   : nullptr;
            for (const auto& v : coeffs) {
                auto leaf = formula::var(v);
                h = h ? formula::apply({"xor", named("xor")}, {h, leaf}) : leaf;
            }
        }
        return {h, queries};
    }
    fail(errc::not_learnable,
         "clone " + clone_name(c) + " is not exactly learnable with membership queries");
}

// ---------------------------------------------------------------------------
// Parity lower bound: the GF(2) witness construction
// ---------------------------------------------------------------------------

struct parity_result {
    enum class status { witness_pair, saturated };
    status st;
    std::vector<std::string> coeffs1, coeffs2;   // odd-size variable sets
    formula_ptr f1, f2;
};

namespace detail {

inline formula_ptr xor3_chain(const std::vector<std::string>& vs) {
    expect(vs.size() % 2 == 1, errc::internal_inconsistency, "parity witness must be odd");
    formula_ptr f = formula::var(vs[0]);
    for (std::size_t i = 1; i + 1 < vs.size(); i += 2)
        f = formula::apply({"xor3", named("xor3")},
                           {f, formula::var(vs[i]), formula::var(vs[i + 1])});
    return f;
}

} // namespace detail

// Examples are viewed as a linear system over GF(2), augmented with the
// all-true assignment labeled 1 (which pins the fitting parities to the odd
// ones). Rank below |props| yields two distinct fitting parity functions.
inline parity_result parity_lower_bound(const std::vector<std::string>& props,
                                        const teaching_set& examples,
                                        const config& cfg = default_config()) {
    int n = static_cast<int>(props.size());
    expect(n >= 1 && n <= cfg.brute_var_cap, errc::bad_input, "prop count out of range");
    std::vector<std::uint64_t> rows;
    std::vector<int> rhs;
    for (const auto& ex : examples) {
        expect(ex.kind == labeled_example::payload::prop, errc::kind_mismatch,
               "modal example in a parity system");
        rows.push_back(detail::assignment_mask(props, ex.v));
        rhs.push_back(ex.label);
    }
    rows.push_back((1ull << n) - 1);
    rhs.push_back(1);

    // Gaussian elimination.
    std::vector<std::uint64_t> reduced;
    std::vector<int> rlab;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::uint64_t r = rows[i];
        int b = rhs[i];
        for (std::size_t j = 0; j < reduced.size(); ++j) {
            std::uint64_t pivot = reduced[j] & ~(reduced[j] - 1);
            if (r & pivot) { r ^= reduced[j]; b ^= rlab[j]; }
        }
        if (r == 0) {
            expect(b == 0, errc::inconsistent_examples, "no parity function fits the examples");
            continue;
        }
        reduced.push_back(r);
        rlab.push_back(b);
    }
    // Back-substitution into reduced echelon form.
    for (std::size_t j = 0; j < reduced.size(); ++j)
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            if (i == j) continue;
            std::uint64_t pivot = reduced[j] & ~(reduced[j] - 1);
            if (reduced[i] & pivot) { reduced[i] ^= reduced[j]; rlab[i] ^= rlab[j]; }
        }

    std::uint64_t pivot_mask = 0;
    for (auto r : reduced) pivot_mask |= r & ~(r - 1);
    std::uint64_t particular = 0;
    for (std::size_t j = 0; j < reduced.size(); ++j)
        if (rlab[j]) particular |= reduced[j] & ~(reduced[j] - 1);

    if (static_cast<int>(reduced.size()) >= n)
        return {parity_result::status::saturated, {}, {}, nullptr, nullptr};

    // First null-space vector: lowest free variable plus the pivots it touches.
    std::uint64_t free_bit = 0;
    for (int k = 0; k < n; ++k)
        if (!((pivot_mask >> k) & 1)) { free_bit = 1ull << k; break; }
    std::uint64_t kernel = free_bit;
    for (std::size_t j = 0; j < reduced.size(); ++j)
        if (reduced[j] & free_bit) kernel |= reduced[j] & ~(reduced[j] - 1);

    auto names = [&](std::uint64_t mask) {
        std::vector<std::string> out;
        for (int k = 0; k < n; ++k)
            if ((mask >> k) & 1) out.push_back(props[k]);
        return out;
    };
    parity_result out{parity_result::status::witness_pair,
                      names(particular), names(particular ^ kernel), nullptr, nullptr};
    out.f1 = detail::xor3_chain(out.coeffs1);
    out.f2 = detail::xor3_chain(out.coeffs2);
    return out;
}

// ---------------------------------------------------------------------------
// Modal teaching for the negation-top prefix fragment
// ---------------------------------------------------------------------------

namespace detail {

// Canonical shape of an ML_{dia,box,not,top} formula: a modal prefix over one
// of p, not p, top, bot. Trailing box-top and dia-bot collapse.
struct prefix_form {
    enum class core { pos, neg, top, bot };
    std::vector<bool> prefix;   // true = box, outermost first
    core c;
    std::string var;            // for pos/neg
};

inline prefix_form negate(prefix_form f) {
    for (auto&& b : f.prefix) b = !b;
    switch (f.c) {
        case prefix_form::core::pos: f.c = prefix_form::core::neg; break;
        case prefix_form::core::neg: f.c = prefix_form::core::pos; break;
        case prefix_form::core::top: f.c = prefix_form::core::bot; break;
        case prefix_form::core::bot: f.c = prefix_form::core::top; break;
    }
    return f;
}

inline prefix_form to_prefix_form(const mformula_ptr& f) {
    switch (f->k) {
        case mformula::kind::var: return {{}, prefix_form::core::pos, f->name};
        case mformula::kind::dia: {
            auto inner = to_prefix_form(f->args[0]);
            inner.prefix.insert(inner.prefix.begin(), false);
            return inner;
        }
        case mformula::kind::box: {
            auto inner = to_prefix_form(f->args[0]);
            inner.prefix.insert(inner.prefix.begin(), true);
            return inner;
        }
        case mformula::kind::defined: return to_prefix_form(expand(f));
        case mformula::kind::apply: {
            if (f->conn.fn == named("not")) return negate(to_prefix_form(f->args[0]));
            if (f->conn.fn == named("top")) return {{}, prefix_form::core::top, ""};
            if (f->conn.fn == named("bot")) return {{}, prefix_form::core::bot, ""};
            fail(errc::not_in_fragment,
                 "connective '" + f->conn.name + "' outside the prefix fragment");
        }
    }
    fail(errc::not_in_fragment, "unsupported node");
}

inline void normalize_prefix(prefix_form& f) {
    while (!f.prefix.empty()) {
        if (f.c == prefix_form::core::top && f.prefix.back()) f.prefix.pop_back();
        else if (f.c == prefix_form::core::bot && !f.prefix.back()) f.prefix.pop_back();
        else break;
    }
}

inline kripke_model bare_chain(int len, const std::vector<std::string>& props,
                               std::optional<int> mark_world = std::nullopt,
                               const std::string& mark_var = "") {
    std::vector<std::string> worlds;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::set<std::string>> val(len + 1);
    for (int i = 0; i <= len; ++i) {
        worlds.push_back("w" + std::to_string(i));
        if (i < len) edges.push_back({i, i + 1});
    }
    (void)props;
    if (mark_world) val[*mark_world].insert(mark_var);
    return kripke_model::make(worlds, edges, val);
}

} // namespace detail

// The two chain examples for prefix-over-literal targets, the four loop/chain
// examples for prefix-over-constant targets, the bare truncated chains that
// pin each prefix position, then refinement against the bounded verifier
// until the set uniquely characterizes the target at bound depth+1.
teaching_set teach_modal(const mformula_ptr& f, const std::vector<std::string>& props,
                         const config& cfg = default_config());

// ---------------------------------------------------------------------------
// Bounded unique-characterization check for simple modal fragments
// ---------------------------------------------------------------------------

struct modal_unique_result {
    enum class status { unique_up_to_bound, ambiguous, not_fitting };
    status st;
    std::string witness;            // printed rival formula, for ambiguous
    std::optional<pointed_model> distinguishing;
};

struct modal_fragment {
    modal_ops ops;
    basis fns;   // propositional connectives available in the fragment
};

namespace detail {

// Deterministic family of pointed models used both for candidate
// deduplication and as the search space for sound refutations.
inline std::vector<pointed_model> model_family(const std::vector<std::string>& props,
                                               int bound, const config& cfg) {
    std::vector<pointed_model> out;
    int np = static_cast<int>(props.size());
    expect(np >= 1 && np * (bound + 2) <= 14, errc::prop_cap_exceeded,
           "model family too large for this prop set and bound");
    int max_len = std::min(bound, cfg.modal_model_bound - 1);

    auto labeled = [&](int worlds, unsigned lab) {
        std::vector<std::set<std::string>> val(worlds);
        for (int w = 0; w < worlds; ++w)
            for (int k = 0; k < np; ++k)
                if ((lab >> (w * np + k)) & 1) val[w].insert(props[k]);
        return val;
    };

    // plain chains with every labeling
    for (int len = 0; len <= max_len; ++len) {
        std::vector<std::string> worlds;
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i <= len; ++i) {
            worlds.push_back("w" + std::to_string(i));
            if (i < len) edges.push_back({i, i + 1});
        }
        for (unsigned lab = 0; lab < (1u << ((len + 1) * np)); ++lab)
            out.push_back({kripke_model::make(worlds, edges, labeled(len + 1, lab)), "w0"});
    }
    // single reflexive point with every labeling
    for (unsigned lab = 0; lab < (1u << np); ++lab)
        out.push_back({kripke_model::make({"w0"}, {{0, 0}}, labeled(1, lab)), "w0"});
    // chain with a loop before one extra point
    for (int len = 0; len + 1 <= std::min(max_len + 1, cfg.modal_model_bound - 1); ++len) {
        std::vector<std::string> worlds;
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i <= len + 1; ++i) worlds.push_back("w" + std::to_string(i));
        for (int i = 0; i < len; ++i) edges.push_back({i, i + 1});
        edges.push_back({len, len});
        edges.push_back({len, len + 1});
        for (unsigned lab = 0; lab < (1u << ((len + 2) * np)); ++lab)
            out.push_back({kripke_model::make(worlds, edges, labeled(len + 2, lab)), "w0"});
    }
    // a two-way branch at the root
    {
        std::vector<std::string> worlds = {"w0", "w1", "w2"};
        std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}};
        for (unsigned lab = 0; lab < (1u << (3 * np)); ++lab)
            out.push_back({kripke_model::make(worlds, edges, labeled(3, lab)), "w0"});
    }
    return out;
}

} // namespace detail

// Enumerates fragment formulas to the bound modulo semantic signatures over
// the model family; two candidates with the same signature count once.
// Ambiguous is a sound refutation (a rival plus a family model separating it
// from the target); unique is explicitly only up-to-bound.
modal_unique_result verify_unique_modal(const mformula_ptr& f, const teaching_set& examples,
                                        const modal_fragment& fragment,
                                        const std::vector<std::string>& props, int bound,
                                        const config& cfg = default_config());

// ---------------------------------------------------------------------------
// PC reductions
// ---------------------------------------------------------------------------

enum class pc_kind { oxor, aimp, modal_diamond, modal_box };

inline const char* pc_kind_name(pc_kind k) {
    switch (k) {
        case pc_kind::oxor: return "oxor";
        case pc_kind::aimp: return "aimp";
        case pc_kind::modal_diamond: return "modal_diamond";
        case pc_kind::modal_box: return "modal_box";
    }
    return "?";
}

inline pc_kind parse_pc_kind(const std::string& s) {
    if (s == "oxor") return pc_kind::oxor;
    if (s == "aimp") return pc_kind::aimp;
    if (s == "modal_diamond") return pc_kind::modal_diamond;
    if (s == "modal_box") return pc_kind::modal_box;
    fail(errc::bad_input, "unknown reduction kind '" + s + "'");
}

struct pc_image {
    formula_ptr prop;        // for the propositional kinds
    mformula_ptr modal;      // for the modal kinds
    std::string example_map; // closed description of h
};

pc_image pc_reduce(pc_kind kind, const formula_ptr& f, const config& cfg = default_config());

struct pc_report {
    bool pass;
    bool at_bound;               // true for the modal kinds (bounded model search)
    std::string counterexample;  // empty when pass
};

// Checks both reduction conditions: exhaustively over the source clone's
// functions and all assignments, and over all extended examples (assignments,
// or pointed models up to the world bound for the modal kinds). `mutate`
// corrupts the example map to demonstrate the check has teeth.
pc_report verify_pc(pc_kind kind, int n, int model_bound = 4, bool mutate = false,
                    const config& cfg = default_config());

// ---------------------------------------------------------------------------
// Clone closure with formula witnesses (shared by verify_pc and the verifiers)
// ---------------------------------------------------------------------------

struct witnessed_closure {
    std::vector<std::string> props;
    std::vector<bool_fn> fns;
    std::vector<formula_ptr> witnesses;
};

inline witnessed_closure close_with_witnesses(const basis& B,
                                              const std::vector<std::string>& props,
                                              const config& cfg = default_config()) {
    int n = static_cast<int>(props.size());
    expect(n >= 1 && n <= cfg.arity_cap, errc::arity_out_of_range, "bad arity");
    witnessed_closure out;
    out.props = props;
    std::set<std::uint64_t> seen;
    auto push = [&](std::uint64_t t, formula_ptr w) {
        if (!seen.insert(t).second) return;
        out.fns.push_back(bool_fn{n, t});
        out.witnesses.push_back(std::move(w));
        expect(out.fns.size() <= cfg.closure_budget, errc::budget_exceeded,
               "witnessed closure exceeded budget");
    };
    for (int k = 1; k <= n; ++k) push(arg_mask(n, k), formula::var(props[k - 1]));
    std::size_t old_size = 0;
    while (true) {
        std::size_t cur = out.fns.size();
        if (cur == old_size) break;
        for (const auto& e : B.entries) {
            int m = e.fn.arity;
            std::vector<std::size_t> idx(m);
            for (int pivot = 0; pivot < m; ++pivot) {
                auto lo = [&](int j) { return j == pivot ? old_size : std::size_t{0}; };
                auto hi = [&](int j) { return j < pivot ? old_size : cur; };
                bool empty = false;
                for (int j = 0; j < m; ++j) {
                    idx[j] = lo(j);
                    if (idx[j] >= hi(j)) empty = true;
                }
                if (empty) continue;
                while (true) {
                    std::vector<std::uint64_t> hs(m);
                    std::vector<formula_ptr> ws(m);
                    for (int j = 0; j < m; ++j) {
                        hs[j] = out.fns[idx[j]].table;
                        ws[j] = out.witnesses[idx[j]];
                    }
                    push(compose_tables(e.fn, hs, n),
                         formula::apply({e.name.empty() ? print_fn_literal(e.fn) : e.name,
                                         e.fn},
                                        std::move(ws)));
                    int j = 0;
                    for (; j < m; ++j) {
                        if (++idx[j] < hi(j)) break;
                        idx[j] = lo(j);
                    }
                    if (j == m) break;
                }
            }
        }
        old_size = cur;
    }
    return out;
}

} // namespace clonekit

#include "clonekit/teachlearn_impl.hpp"
