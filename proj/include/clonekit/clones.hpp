#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "clonekit/boolfn.hpp"
#include "clonekit/config.hpp"
#include "clonekit/error.hpp"

namespace clonekit {

// ---------------------------------------------------------------------------
// Bases
// ---------------------------------------------------------------------------

struct basis_entry {
    bool_fn fn;
    std::string name;   // display name, may be empty
};

// A finite set of functions; empty is allowed (it generates the projection
// clone I2). Order of insertion is preserved, duplicates collapse.
struct basis {
    std::vector<basis_entry> entries;

    basis() = default;
    basis(std::initializer_list<std::string> names, const config& cfg = default_config()) {
        for (const auto& n : names) add(named(n, cfg), n);
    }

    void add(const bool_fn& f, std::string name = "") {
        for (auto& e : entries)
            if (e.fn == f) return;
        entries.push_back({f, std::move(name)});
    }

    bool contains_fn(const bool_fn& f) const {
        for (const auto& e : entries)
            if (e.fn == f) return true;
        return false;
    }

    std::size_t size() const { return entries.size(); }
    bool empty() const { return entries.empty(); }

    int max_arity() const {
        int m = 0;
        for (const auto& e : entries) m = std::max(m, e.fn.arity);
        return m;
    }
};

inline basis basis_union(const basis& a, const basis& b) {
    basis out = a;
    for (const auto& e : b.entries) out.add(e.fn, e.name);
    return out;
}

// ---------------------------------------------------------------------------
// Saturation closure at a fixed arity
// ---------------------------------------------------------------------------

// The n-ary part of the clone generated by B: start from the n projections and
// keep applying each basis function to tuples of already-obtained n-ary
// functions until a fixpoint. Complete for membership because composition with
// projections realizes variable permutation and identification. Tables are
// returned sorted; growth beyond cfg.closure_budget raises BudgetExceeded.
inline std::vector<std::uint64_t> close_at_arity(const basis& B, int n,
                                                 const config& cfg = default_config()) {
    expect(n >= 1 && n <= cfg.arity_cap, errc::arity_out_of_range,
           "closure arity outside 1..cap");
    for (const auto& e : B.entries)
        expect(e.fn.arity <= cfg.arity_cap, errc::arity_out_of_range,
               "basis function exceeds arity cap");

    std::vector<std::uint64_t> fns;
    std::unordered_set<std::uint64_t> seen;
    auto push = [&](std::uint64_t t) {
        if (seen.insert(t).second) {
            fns.push_back(t);
            if (fns.size() > cfg.closure_budget)
                fail(errc::budget_exceeded,
                     "closure at arity " + std::to_string(n) + " exceeded budget " +
                         std::to_string(cfg.closure_budget));
        }
    };
    for (int k = 1; k <= n; ++k) push(arg_mask(n, k));

    // Semi-naive rounds: per round, enumerate exactly the tuples that touch at
    // least one function discovered in the previous round (pivot position gets
    // the fresh range, earlier positions the old range, later ones the full
    // snapshot).
    std::size_t old_size = 0;
    while (true) {
        std::size_t cur = fns.size();
        if (cur == old_size) break;
        for (const auto& e : B.entries) {
            int m = e.fn.arity;
            std::vector<std::uint64_t> hs(m);
            std::vector<std::size_t> idx(m);
            for (int pivot = 0; pivot < m; ++pivot) {
                auto lo = [&](int j) { return j == pivot ? old_size : std::size_t{0}; };
                auto hi = [&](int j) {
                    if (j == pivot) return cur;
                    return j < pivot ? old_size : cur;
                };
                bool empty = false;
                for (int j = 0; j < m; ++j) {
                    idx[j] = lo(j);
                    if (idx[j] >= hi(j)) empty = true;
                }
                if (empty) continue;
                while (true) {
                    for (int j = 0; j < m; ++j) hs[j] = fns[idx[j]];
                    push(compose_tables(e.fn, hs, n));
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
    std::sort(fns.begin(), fns.end());
    return fns;
}

// ---------------------------------------------------------------------------
// Named clones (the complete catalog of Boolean clones)
// ---------------------------------------------------------------------------

enum class clone_family {
    BF, R0, R1, R2,
    M, M0, M1, M2,
    S0, S1, S0n, S1n,
    S00, S00n, S01, S01n, S02, S02n,
    S10, S10n, S11, S11n, S12, S12n,
    D, D1, D2,
    L, L0, L1, L2, L3,
    V, V0, V1, V2,
    E, E0, E1, E2,
    N, N2,
    I, I0, I1, I2,
};

inline bool family_parameterized(clone_family f) {
    switch (f) {
        case clone_family::S0n: case clone_family::S1n:
        case clone_family::S00n: case clone_family::S01n: case clone_family::S02n:
        case clone_family::S10n: case clone_family::S11n: case clone_family::S12n:
            return true;
        default:
            return false;
    }
}

inline const char* family_name(clone_family f) {
    switch (f) {
        case clone_family::BF: return "BF";
        case clone_family::R0: return "R0";   case clone_family::R1: return "R1";
        case clone_family::R2: return "R2";
        case clone_family::M: return "M";     case clone_family::M0: return "M0";
        case clone_family::M1: return "M1";   case clone_family::M2: return "M2";
        case clone_family::S0: return "S0";   case clone_family::S1: return "S1";
        case clone_family::S0n: return "S0n"; case clone_family::S1n: return "S1n";
        case clone_family::S00: return "S00"; case clone_family::S00n: return "S00n";
        case clone_family::S01: return "S01"; case clone_family::S01n: return "S01n";
        case clone_family::S02: return "S02"; case clone_family::S02n: return "S02n";
        case clone_family::S10: return "S10"; case clone_family::S10n: return "S10n";
        case clone_family::S11: return "S11"; case clone_family::S11n: return "S11n";
        case clone_family::S12: return "S12"; case clone_family::S12n: return "S12n";
        case clone_family::D: return "D";     case clone_family::D1: return "D1";
        case clone_family::D2: return "D2";
        case clone_family::L: return "L";     case clone_family::L0: return "L0";
        case clone_family::L1: return "L1";   case clone_family::L2: return "L2";
        case clone_family::L3: return "L3";
        case clone_family::V: return "V";     case clone_family::V0: return "V0";
        case clone_family::V1: return "V1";   case clone_family::V2: return "V2";
        case clone_family::E: return "E";     case clone_family::E0: return "E0";
        case clone_family::E1: return "E1";   case clone_family::E2: return "E2";
        case clone_family::N: return "N";     case clone_family::N2: return "N2";
        case clone_family::I: return "I";     case clone_family::I0: return "I0";
        case clone_family::I1: return "I1";   case clone_family::I2: return "I2";
    }
    return "?";
}

struct named_clone {
    clone_family family;
    std::optional<int> degree;   // present iff family is parameterized, n >= 2

    friend bool operator==(const named_clone&, const named_clone&) = default;
    friend auto operator<=>(const named_clone&, const named_clone&) = default;
};

inline named_clone clone_of(clone_family f) {
    expect(!family_parameterized(f), errc::bad_input, "degree required");
    return {f, std::nullopt};
}

inline named_clone clone_of(clone_family f, int degree) {
    expect(family_parameterized(f), errc::bad_input, "family takes no degree");
    expect(degree >= 2, errc::bad_input, "degree must be >= 2");
    return {f, degree};
}

inline std::string clone_name(const named_clone& c) {
    std::string s = family_name(c.family);
    if (c.degree) {
        s.pop_back();                          // strip the trailing 'n'
        s += "^" + std::to_string(*c.degree);
    }
    return s;
}

inline named_clone parse_clone_name(const std::string& text) {
    std::string fam = text;
    std::optional<int> deg;
    if (auto caret = text.find('^'); caret != std::string::npos) {
        fam = text.substr(0, caret) + "n";
        try {
            deg = std::stoi(text.substr(caret + 1));
        } catch (...) {
            fail(errc::syntax_error, "bad clone degree in '" + text + "'");
        }
    }
    static const clone_family all[] = {
        clone_family::BF, clone_family::R0, clone_family::R1, clone_family::R2,
        clone_family::M, clone_family::M0, clone_family::M1, clone_family::M2,
        clone_family::S0, clone_family::S1, clone_family::S0n, clone_family::S1n,
        clone_family::S00, clone_family::S00n, clone_family::S01, clone_family::S01n,
        clone_family::S02, clone_family::S02n, clone_family::S10, clone_family::S10n,
        clone_family::S11, clone_family::S11n, clone_family::S12, clone_family::S12n,
        clone_family::D, clone_family::D1, clone_family::D2,
        clone_family::L, clone_family::L0, clone_family::L1, clone_family::L2,
        clone_family::L3, clone_family::V, clone_family::V0, clone_family::V1,
        clone_family::V2, clone_family::E, clone_family::E0, clone_family::E1,
        clone_family::E2, clone_family::N, clone_family::N2,
        clone_family::I, clone_family::I0, clone_family::I1, clone_family::I2,
    };
    for (clone_family f : all)
        if (fam == family_name(f)) {
            expect(family_parameterized(f) == deg.has_value(), errc::syntax_error,
                   "degree mismatch for clone '" + text + "'");
            if (deg) expect(*deg >= 2, errc::syntax_error, "degree must be >= 2");
            return {f, deg};
        }
    fail(errc::unknown_name, "no clone named '" + text + "'");
}

// Defining membership predicate of each named clone, straight from the
// definition column of the clone table.
inline bool clone_member(const named_clone& c, const bool_fn& f) {
    auto r0 = [&] { return is_bot_reproducing(f); };
    auto r1 = [&] { return is_top_reproducing(f); };
    auto mono = [&] { return is_monotone(f); };
    auto sd = [&] { return is_self_dual(f); };
    auto lin = [&] { return is_linear(f); };
    auto s0full = [&] { return separation_degree(f, 0).k == sep_degree::kind::infinite; };
    auto s1full = [&] { return separation_degree(f, 1).k == sep_degree::kind::infinite; };
    auto s0deg = [&] { return separation_degree(f, 0).at_least(*c.degree); };
    auto s1deg = [&] { return separation_degree(f, 1).at_least(*c.degree); };
    switch (c.family) {
        case clone_family::BF:  return true;
        case clone_family::R0:  return r0();
        case clone_family::R1:  return r1();
        case clone_family::R2:  return r0() && r1();
        case clone_family::M:   return mono();
        case clone_family::M0:  return mono() && r0();
        case clone_family::M1:  return mono() && r1();
        case clone_family::M2:  return mono() && r0() && r1();
        case clone_family::S0:  return s0full();
        case clone_family::S1:  return s1full();
        case clone_family::S0n: return s0deg();
        case clone_family::S1n: return s1deg();
        case clone_family::S00: return s0full() && r0() && r1() && mono();
        case clone_family::S00n: return s0deg() && r0() && r1() && mono();
        case clone_family::S01: return s0full() && mono();
        case clone_family::S01n: return s0deg() && mono();
        case clone_family::S02: return s0full() && r0() && r1();
        case clone_family::S02n: return s0deg() && r0() && r1();
        case clone_family::S10: return s1full() && r0() && r1() && mono();
        case clone_family::S10n: return s1deg() && r0() && r1() && mono();
        case clone_family::S11: return s1full() && mono();
        case clone_family::S11n: return s1deg() && mono();
        case clone_family::S12: return s1full() && r0() && r1();
        case clone_family::S12n: return s1deg() && r0() && r1();
        case clone_family::D:   return sd();
        case clone_family::D1:  return sd() && r0() && r1();
        case clone_family::D2:  return sd() && mono();
        case clone_family::L:   return lin();
        case clone_family::L0:  return lin() && r0();
        case clone_family::L1:  return lin() && r1();
        case clone_family::L2:  return lin() && r0() && r1();
        case clone_family::L3:  return lin() && sd();
        case clone_family::V:   return is_disjunction_or_constant(f);
        case clone_family::V0:  return is_disjunction_or_constant(f) && r0();
        case clone_family::V1:  return is_disjunction_or_constant(f) && r1();
        case clone_family::V2:  return is_disjunction_or_constant(f) && r0() && r1();
        case clone_family::E:   return is_conjunction_or_constant(f);
        case clone_family::E0:  return is_conjunction_or_constant(f) && r0();
        case clone_family::E1:  return is_conjunction_or_constant(f) && r1();
        case clone_family::E2:  return is_conjunction_or_constant(f) && r0() && r1();
        case clone_family::N:   return essential_var_count(f) <= 1;
        case clone_family::N2:  return essential_var_count(f) == 1;
        case clone_family::I:   return is_projection_or_constant(f);
        case clone_family::I0:  return is_projection_or_constant(f) && r0();
        case clone_family::I1:  return is_projection_or_constant(f) && r1();
        case clone_family::I2:  return is_projection(f);
    }
    return false;
}

// Standard bases, one per clone (first listed base on rows with two).
inline basis base_of(const named_clone& c, const config& cfg = default_config()) {
    if (c.degree) {
        expect(*c.degree <= cfg.degree_cap, errc::degree_cap_exceeded,
               "degree " + std::to_string(*c.degree) + " above cap " +
                   std::to_string(cfg.degree_cap));
    }
    basis b;
    auto addn = [&](const std::string& name) { b.add(named(name, cfg), name); };
    auto addT = [&](int n, int m) {
        b.add(threshold_fn(n, m, cfg), "T" + std::to_string(n) + "_" + std::to_string(m));
    };
    int d = c.degree.value_or(0);
    switch (c.family) {
        case clone_family::BF:  addn("and"); addn("not"); break;
        case clone_family::R0:  addn("and"); addn("xor"); break;
        case clone_family::R1:  addn("or");  addn("eq");  break;
        case clone_family::R2:  addn("or");  addn("and_eq3"); break;
        case clone_family::M:   addn("or"); addn("and"); addn("bot"); addn("top"); break;
        case clone_family::M0:  addn("or"); addn("and"); addn("bot"); break;
        case clone_family::M1:  addn("or"); addn("and"); addn("top"); break;
        case clone_family::M2:  addn("or"); addn("and"); break;
        case clone_family::S0:  addn("imp"); break;
        case clone_family::S1:  addn("nimp"); break;
        case clone_family::S0n: addn("imp"); addT(d + 1, 2); break;
        case clone_family::S1n: addn("nimp"); addT(d + 1, d); break;
        case clone_family::S00: addn("or_and3"); break;
        case clone_family::S00n:
            if (d == 2) { addn("or_and3"); addT(3, 2); }
            else addT(d + 1, 2);
            break;
        case clone_family::S01: addn("or_and3"); addn("top"); break;
        case clone_family::S01n: addT(d + 1, 2); addn("top"); break;
        case clone_family::S02: addn("or_nimp3"); break;
        case clone_family::S02n: addn("or_nimp3"); addT(d + 1, 2); break;
        case clone_family::S10: addn("and_or3"); break;
        case clone_family::S10n:
            if (d == 2) { addn("and_or3"); addT(3, 2); }
            else addT(d + 1, d);
            break;
        case clone_family::S11: addn("and_or3"); addn("bot"); break;
        case clone_family::S11n: addT(d + 1, d); addn("bot"); break;
        case clone_family::S12: addn("aimp"); break;
        case clone_family::S12n: addn("aimp"); addT(d + 1, d); break;
        case clone_family::D:   addn("maj_nn"); break;
        case clone_family::D1:  addn("maj_n"); break;
        case clone_family::D2:  addn("maj"); break;
        case clone_family::L:   addn("xor"); addn("top"); break;
        case clone_family::L0:  addn("xor"); break;
        case clone_family::L1:  addn("eq"); break;
        case clone_family::L2:  addn("xor3"); break;
        case clone_family::L3:  addn("xnor3"); break;
        case clone_family::V:   addn("or"); addn("bot"); addn("top"); break;
        case clone_family::V0:  addn("or"); addn("bot"); break;
        case clone_family::V1:  addn("or"); addn("top"); break;
        case clone_family::V2:  addn("or"); break;
        case clone_family::E:   addn("and"); addn("bot"); addn("top"); break;
        case clone_family::E0:  addn("and"); addn("bot"); break;
        case clone_family::E1:  addn("and"); addn("top"); break;
        case clone_family::E2:  addn("and"); break;
        case clone_family::N:   addn("not"); addn("bot"); addn("top"); break;
        case clone_family::N2:  addn("not"); break;
        case clone_family::I:   addn("bot"); addn("top"); break;
        case clone_family::I0:  addn("bot"); break;
        case clone_family::I1:  addn("top"); break;
        case clone_family::I2:  break;
    }
    return b;
}

// Containment of named clones. Since base_of(c2) generates exactly c2 and c1
// is exactly the set cut out by its defining predicate, c2 <= c1 holds iff
// every base function of c2 satisfies c1's predicate.
inline bool contains(const named_clone& c1, const named_clone& c2,
                     const config& cfg = default_config()) {
    for (const auto& e : base_of(c2, cfg).entries)
        if (!clone_member(c1, e.fn)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Identification of a basis as a named clone
// ---------------------------------------------------------------------------

namespace detail {

struct basis_profile {
    sep_degree d0, d1;   // min separation degree over the basis, each side
};

inline sep_degree min_sep(const sep_degree& a, const sep_degree& b) {
    auto rank = [](const sep_degree& s) {
        switch (s.k) {
            case sep_degree::kind::none: return 0;
            case sep_degree::kind::finite: return 1;
            case sep_degree::kind::infinite: return 2;
        }
        return 0;
    };
    if (rank(a) != rank(b)) return rank(a) < rank(b) ? a : b;
    if (a.k == sep_degree::kind::finite) return a.value <= b.value ? a : b;
    return a;
}

inline basis_profile profile_of(const basis& B) {
    basis_profile p{{sep_degree::kind::infinite, 0}, {sep_degree::kind::infinite, 0}};
    for (const auto& e : B.entries) {
        p.d0 = min_sep(p.d0, separation_degree(e.fn, 0));
        p.d1 = min_sep(p.d1, separation_degree(e.fn, 1));
    }
    return p;
}

} // namespace detail

// All named clone instances with degrees up to `cap`, in a fixed deterministic
// order (family declaration order, parameterized degrees ascending).
inline std::vector<named_clone> all_clones(int degree_cap) {
    std::vector<named_clone> out;
    static const clone_family order[] = {
        clone_family::BF, clone_family::R0, clone_family::R1, clone_family::R2,
        clone_family::M, clone_family::M0, clone_family::M1, clone_family::M2,
        clone_family::S0, clone_family::S1, clone_family::S0n, clone_family::S1n,
        clone_family::S00, clone_family::S00n, clone_family::S01, clone_family::S01n,
        clone_family::S02, clone_family::S02n, clone_family::S10, clone_family::S10n,
        clone_family::S11, clone_family::S11n, clone_family::S12, clone_family::S12n,
        clone_family::D, clone_family::D1, clone_family::D2,
        clone_family::L, clone_family::L0, clone_family::L1, clone_family::L2,
        clone_family::L3, clone_family::V, clone_family::V0, clone_family::V1,
        clone_family::V2, clone_family::E, clone_family::E0, clone_family::E1,
        clone_family::E2, clone_family::N, clone_family::N2,
        clone_family::I, clone_family::I0, clone_family::I1, clone_family::I2,
    };
    for (clone_family f : order) {
        if (family_parameterized(f)) {
            for (int d = 2; d <= degree_cap; ++d) out.push_back({f, d});
        } else {
            out.push_back({f, std::nullopt});
        }
    }
    return out;
}

// The least named clone containing B. The candidate is the intersection of
// the defining families satisfied by all of B (exact, since the catalog is
// closed under intersection and complete); it is then re-confirmed by
// bidirectional containment wherever a saturation check is affordable.
inline named_clone identify(const basis& B, const config& cfg = default_config()) {
    for (const auto& e : B.entries)
        expect(e.fn.arity <= cfg.arity_cap, errc::arity_out_of_range,
               "basis function exceeds arity cap");
    auto prof = detail::profile_of(B);

    std::vector<named_clone> candidates;
    auto consider = [&](const named_clone& c) {
        for (const auto& e : B.entries)
            if (!clone_member(c, e.fn)) return;
        candidates.push_back(c);
    };
    for (const auto& c : all_clones(0))   // unparameterized instances only
        if (!family_parameterized(c.family)) consider(c);
    auto consider_deg = [&](clone_family fam, const sep_degree& d) {
        if (d.k == sep_degree::kind::finite) consider({fam, d.value});
    };
    consider_deg(clone_family::S0n, prof.d0);
    consider_deg(clone_family::S00n, prof.d0);
    consider_deg(clone_family::S01n, prof.d0);
    consider_deg(clone_family::S02n, prof.d0);
    consider_deg(clone_family::S1n, prof.d1);
    consider_deg(clone_family::S10n, prof.d1);
    consider_deg(clone_family::S11n, prof.d1);
    consider_deg(clone_family::S12n, prof.d1);

    // With an infinite separation degree the full S-families were considered
    // above; with a finite one only that exact degree matters.
    std::optional<named_clone> minimal;
    config wide = cfg;
    wide.degree_cap = cfg.arity_cap - 1;   // compare freely, cap-check afterwards
    for (const auto& c : candidates) {
        bool below_all = true;
        for (const auto& other : candidates)
            if (!contains(other, c, wide)) { below_all = false; break; }
        if (below_all) {
            expect(!minimal, errc::internal_inconsistency, "two minimal clones");
            minimal = c;
        }
    }
    expect(minimal.has_value(), errc::internal_inconsistency,
           "no minimal named clone above basis");
    if (minimal->degree && *minimal->degree > cfg.degree_cap)
        fail(errc::degree_cap_exceeded,
             "generated clone " + clone_name(*minimal) + " exceeds degree cap " +
                 std::to_string(cfg.degree_cap));

    // Confirmation, base containment in both directions.
    for (const auto& e : B.entries)
        expect(clone_member(*minimal, e.fn), errc::internal_inconsistency,
               "identified clone rejects a basis function");
    for (const auto& e : base_of(*minimal, wide).entries) {
        if (is_projection(e.fn) || B.contains_fn(e.fn)) continue;
        if (e.fn.arity <= 3) {
            auto fns = close_at_arity(B, e.fn.arity, cfg);
            expect(std::binary_search(fns.begin(), fns.end(), e.fn.table),
                   errc::internal_inconsistency,
                   "base function of identified clone not generated by basis");
        }
        // Thresholds of arity >= 4 are pinned by the exact separation-degree
        // computation; their clone slices can exceed any realistic budget.
    }
    return *minimal;
}

// Membership f in <B>. Fast path through identification; falls back to the
// definition for trivial cases.
inline bool member(const bool_fn& f, const basis& B, const config& cfg = default_config()) {
    expect(f.arity <= cfg.arity_cap, errc::arity_out_of_range, "arity exceeds cap");
    if (is_projection(f) || B.contains_fn(f)) return true;
    return clone_member(identify(B, cfg), f);
}

inline bool leq(const basis& O, const basis& O2, const config& cfg = default_config()) {
    for (const auto& e : O.entries)
        if (!member(e.fn, O2, cfg)) return false;
    return true;
}

inline named_clone join_clones(const named_clone& a, const named_clone& b,
                               const config& cfg = default_config()) {
    return identify(basis_union(base_of(a, cfg), base_of(b, cfg)), cfg);
}

inline named_clone meet_clones(const named_clone& a, const named_clone& b,
                               const config& cfg = default_config()) {
    std::vector<named_clone> below;
    for (const auto& c : all_clones(cfg.degree_cap))
        if (contains(a, c, cfg) && contains(b, c, cfg)) below.push_back(c);
    std::optional<named_clone> top;
    for (const auto& c : below) {
        bool above_all = true;
        for (const auto& other : below)
            if (!contains(c, other, cfg)) { above_all = false; break; }
        if (above_all) {
            expect(!top, errc::internal_inconsistency, "meet is not unique");
            top = c;
        }
    }
    expect(top.has_value(), errc::internal_inconsistency,
           "no greatest named clone below both arguments");
    return *top;
}

inline bool in_downward_closed(const std::vector<named_clone>& maximal, const basis& B,
                               const config& cfg = default_config()) {
    named_clone c = identify(B, cfg);
    for (const auto& m : maximal)
        if (contains(m, c, cfg)) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Lattice rendering
// ---------------------------------------------------------------------------

inline std::vector<std::pair<named_clone, named_clone>> covering_edges(
    const config& cfg = default_config()) {
    auto cs = all_clones(cfg.degree_cap);
    std::size_t n = cs.size();
    std::vector<std::vector<bool>> geq(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            geq[i][j] = contains(cs[i], cs[j], cfg);
    std::vector<std::pair<named_clone, named_clone>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !geq[i][j]) continue;
            if (geq[j][i]) continue;   // equal would be an order defect
            bool covering = true;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (geq[i][k] && geq[k][j] && !geq[k][i] && !geq[j][k]) {
                    covering = false;
                    break;
                }
            }
            if (covering) edges.push_back({cs[i], cs[j]});
        }
    return edges;
}

// Post's lattice restricted to the degree cap, as a deterministic DOT digraph
// whose edges form the covering relation (container -> contained).
inline std::string lattice_dot(const config& cfg = default_config()) {
    std::ostringstream out;
    out << "digraph post_lattice {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box, fontname=\"Helvetica\"];\n";
    for (const auto& c : all_clones(cfg.degree_cap))
        out << "  \"" << clone_name(c) << "\";\n";
    for (const auto& [a, b] : covering_edges(cfg))
        out << "  \"" << clone_name(a) << "\" -> \"" << clone_name(b) << "\";\n";
    out << "}\n";
    return out.str();
}

} // namespace clonekit
