#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clonekit/config.hpp"
#include "clonekit/error.hpp"

namespace clonekit {

// A finitary operation on {0,1}, bit-packed: bit i of `table` is the value of
// f on the argument tuple encoded by i with least-significant bit = first
// argument. Immutable after construction; equality is arity + table equality
// (dummy variables are not normalized away).
struct bool_fn {
    int arity = 1;
    std::uint64_t table = 0;

    friend bool operator==(const bool_fn&, const bool_fn&) = default;
    friend auto operator<=>(const bool_fn&, const bool_fn&) = default;
};

inline std::uint64_t table_mask(int arity) {
    int bits = 1 << arity;
    return bits >= 64 ? ~0ull : (1ull << bits) - 1;
}

// Bits of a full table where argument k (1-based) is 1.
inline std::uint64_t arg_mask(int arity, int k) {
    static constexpr std::uint64_t masks[6] = {
        0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
        0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull};
    return masks[k - 1] & table_mask(arity);
}

inline bool_fn make_fn(int arity, std::uint64_t table, const config& cfg = default_config()) {
    expect(arity >= 1 && arity <= cfg.arity_cap, errc::arity_out_of_range,
           "arity " + std::to_string(arity) + " outside 1.." + std::to_string(cfg.arity_cap));
    expect((table & ~table_mask(arity)) == 0, errc::table_length_mismatch,
           "table has bits beyond 2^arity entries");
    return bool_fn{arity, table};
}

inline bool_fn make_fn(int arity, const std::vector<int>& bits, const config& cfg = default_config()) {
    expect(arity >= 1 && arity <= cfg.arity_cap, errc::arity_out_of_range,
           "arity " + std::to_string(arity) + " outside 1.." + std::to_string(cfg.arity_cap));
    expect(bits.size() == (std::size_t{1} << arity), errc::table_length_mismatch,
           "table length " + std::to_string(bits.size()) + ", expected " +
               std::to_string(std::size_t{1} << arity));
    std::uint64_t t = 0;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) t |= 1ull << i;
    return bool_fn{arity, t};
}

inline int eval(const bool_fn& f, const std::vector<int>& args) {
    expect(static_cast<int>(args.size()) == f.arity, errc::arity_mismatch,
           "expected " + std::to_string(f.arity) + " arguments, got " +
               std::to_string(args.size()));
    unsigned idx = 0;
    for (int k = 0; k < f.arity; ++k)
        if (args[k]) idx |= 1u << k;
    return static_cast<int>((f.table >> idx) & 1);
}

inline int eval_index(const bool_fn& f, unsigned idx) {
    return static_cast<int>((f.table >> idx) & 1);
}

inline bool_fn projection(int arity, int k, const config& cfg = default_config()) {
    expect(k >= 1 && k <= arity, errc::arity_out_of_range, "projection index out of range");
    return make_fn(arity, arg_mask(arity, k), cfg);
}

inline bool is_projection(const bool_fn& f) {
    for (int k = 1; k <= f.arity; ++k)
        if (f.table == arg_mask(f.arity, k)) return true;
    return false;
}

// dual(f)(x) = not f(not x)
inline bool_fn dual(const bool_fn& f) {
    int n = 1 << f.arity;
    std::uint64_t t = 0;
    for (int i = 0; i < n; ++i)
        if (!((f.table >> (n - 1 - i)) & 1)) t |= 1ull << i;
    return bool_fn{f.arity, t};
}

// ---------------------------------------------------------------------------
// Named catalog
// ---------------------------------------------------------------------------

inline bool_fn threshold_fn(int n, int m, const config& cfg = default_config()) {
    expect(n >= m && m >= 1, errc::bad_threshold_params,
           "threshold requires n >= m >= 1");
    expect(n <= cfg.arity_cap, errc::arity_out_of_range,
           "threshold arity exceeds cap");
    std::uint64_t t = 0;
    for (int i = 0; i < (1 << n); ++i)
        if (std::popcount(static_cast<unsigned>(i)) >= m) t |= 1ull << i;
    return bool_fn{n, t};
}

// Catalog names accepted here and in formula text. Besides the basic
// connectives this includes the composite base functions used by the clone
// tables: or_and3 = x|(y&z), and_or3 = x&(y|z), or_nimp3 = x|(y&~z),
// and_eq3 = x&(y<->z), maj_n = maj(x,y,~z), maj_nn = maj(x,~y,~z),
// xnor3 = ~(x^y^z).
inline std::optional<bool_fn> lookup_named(const std::string& name) {
    if (name == "and")     return bool_fn{2, 0x8};
    if (name == "or")      return bool_fn{2, 0xe};
    if (name == "not")     return bool_fn{1, 0x1};
    if (name == "top")     return bool_fn{1, 0x3};
    if (name == "bot")     return bool_fn{1, 0x0};
    if (name == "id")      return bool_fn{1, 0x2};
    if (name == "xor")     return bool_fn{2, 0x6};
    if (name == "eq")      return bool_fn{2, 0x9};
    if (name == "imp")     return bool_fn{2, 0xd};
    if (name == "nimp")    return bool_fn{2, 0x2};
    if (name == "xor3")    return bool_fn{3, 0x96};
    if (name == "maj")     return bool_fn{3, 0xe8};
    if (name == "aimp")    return bool_fn{3, 0xa2};   // x & (y -> z)
    if (name == "oxor")    return bool_fn{3, 0xbe};   // x | (y ^ z)
    if (name == "or_and3") return bool_fn{3, 0xea};   // x | (y & z)
    if (name == "and_or3") return bool_fn{3, 0xa8};   // x & (y | z)
    if (name == "or_nimp3") return bool_fn{3, 0xae};  // x | (y & ~z)
    if (name == "and_eq3") return bool_fn{3, 0x82};   // x & (y <-> z)
    if (name == "maj_n")   return bool_fn{3, 0x8e};   // maj(x, y, ~z)
    if (name == "maj_nn")  return bool_fn{3, 0x2b};   // maj(x, ~y, ~z)
    if (name == "xnor3")   return bool_fn{3, 0x69};   // x ^ y ^ z ^ 1
    return std::nullopt;
}

inline bool_fn named(const std::string& name, const config& cfg = default_config()) {
    if (auto f = lookup_named(name)) {
        expect(f->arity <= cfg.arity_cap, errc::arity_out_of_range,
               name + " exceeds arity cap");
        return *f;
    }
    fail(errc::unknown_name, "no catalog function named '" + name + "'");
}

inline bool_fn named(const std::string& name, int n, int m, const config& cfg = default_config()) {
    expect(name == "threshold" || name == "T", errc::unknown_name,
           "parameterized catalog only has threshold(n,m)");
    return threshold_fn(n, m, cfg);
}

// ---------------------------------------------------------------------------
// Function literal "arity:hexTable"
// ---------------------------------------------------------------------------

inline std::string print_fn_literal(const bool_fn& f) {
    static const char* digits = "0123456789abcdef";
    std::string hex;
    int nibbles = ((1 << f.arity) + 3) / 4;
    for (int i = nibbles - 1; i >= 0; --i)
        hex += digits[(f.table >> (4 * i)) & 0xf];
    return std::to_string(f.arity) + ":" + hex;
}

inline bool_fn parse_fn_literal(const std::string& text, const config& cfg = default_config()) {
    auto colon = text.find(':');
    expect(colon != std::string::npos, errc::syntax_error,
           "function literal must be arity:hexTable");
    int arity = 0;
    try {
        arity = std::stoi(text.substr(0, colon));
    } catch (...) {
        fail(errc::syntax_error, "bad arity in function literal '" + text + "'");
    }
    std::uint64_t table = 0;
    std::string hex = text.substr(colon + 1);
    expect(!hex.empty() && hex.size() <= 16, errc::syntax_error, "bad table in literal");
    for (char c : hex) {
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else fail(errc::syntax_error, std::string("bad hex digit '") + c + "'");
        table = (table << 4) | static_cast<unsigned>(d);
    }
    return make_fn(arity, table, cfg);
}

// ---------------------------------------------------------------------------
// Post-invariant properties
// ---------------------------------------------------------------------------

enum class prop_tag {
    bot_reproducing,
    top_reproducing,
    monotone,
    self_dual,
    linear,
    bot_separating,       // degree absent: the whole 0-preimage shares a 0-coordinate
    top_separating,
    bot_separating_deg,   // degree n >= 2
    top_separating_deg,
    disjunction_or_constant,
    conjunction_or_constant,
    at_most_one_variable,
    projection_or_constant,
};

struct post_property {
    prop_tag tag;
    std::optional<int> degree;   // present only for *_separating_deg, n >= 2
};

inline bool is_bot_reproducing(const bool_fn& f) { return ((f.table >> 0) & 1) == 0; }
inline bool is_top_reproducing(const bool_fn& f) {
    return ((f.table >> ((1 << f.arity) - 1)) & 1) == 1;
}

inline bool is_monotone(const bool_fn& f) {
    for (int k = 1; k <= f.arity; ++k) {
        std::uint64_t low = ~arg_mask(f.arity, k) & table_mask(f.arity);
        std::uint64_t at0 = f.table & low;
        std::uint64_t at1 = (f.table >> (1 << (k - 1))) & low;
        if (at0 & ~at1) return false;
    }
    return true;
}

inline bool is_self_dual(const bool_fn& f) { return dual(f) == f; }

inline bool is_linear(const bool_fn& f) {
    std::uint64_t t = (f.table & 1) ? table_mask(f.arity) : 0;
    for (int k = 1; k <= f.arity; ++k) {
        int c = static_cast<int>((f.table >> (1u << (k - 1))) & 1) ^ static_cast<int>(f.table & 1);
        if (c) t ^= arg_mask(f.arity, k);
    }
    return t == f.table;
}

inline int essential_var_count(const bool_fn& f) {
    int count = 0;
    for (int k = 1; k <= f.arity; ++k) {
        std::uint64_t low = ~arg_mask(f.arity, k) & table_mask(f.arity);
        std::uint64_t at0 = f.table & low;
        std::uint64_t at1 = (f.table >> (1 << (k - 1))) & low;
        if (at0 != at1) ++count;
    }
    return count;
}

inline bool is_constant(const bool_fn& f) {
    return f.table == 0 || f.table == table_mask(f.arity);
}

inline bool is_disjunction_or_constant(const bool_fn& f) {
    if (is_constant(f)) return true;
    std::uint64_t t = 0;
    for (int k = 1; k <= f.arity; ++k)
        if ((f.table >> (1u << (k - 1))) & 1) t |= arg_mask(f.arity, k);
    return t != 0 && t == f.table;
}

inline bool is_conjunction_or_constant(const bool_fn& f) {
    return is_disjunction_or_constant(dual(f));
}

inline bool is_projection_or_constant(const bool_fn& f) {
    return is_constant(f) || is_projection(f);
}

// Separation analysis. sep_degree(f, a) classifies how the a-preimage of f
// overlaps on coordinates fixed at a:
//   infinite — the whole preimage shares one such coordinate (vacuous when empty),
//   finite d — every subset of size <= d shares one but some (d+1)-subset does not,
//   none     — already some single point or pair fails.
// Finite degrees are therefore capped by |preimage| - 1.
struct sep_degree {
    enum class kind { none, finite, infinite };
    kind k = kind::none;
    int value = 0;   // meaningful for finite only

    bool at_least(int deg) const {
        return k == kind::infinite || (k == kind::finite && value >= deg);
    }
};

inline sep_degree separation_degree(const bool_fn& f, int a) {
    int n = f.arity;
    int size = 1 << n;
    unsigned full = (1u << n) - 1;
    // Coordinate sets: for each preimage point, the coordinates fixed at a.
    std::vector<unsigned> zsets;
    for (int i = 0; i < size; ++i) {
        if (static_cast<int>((f.table >> i) & 1) != a) continue;
        unsigned coords = a ? static_cast<unsigned>(i) : (~static_cast<unsigned>(i) & full);
        zsets.push_back(coords);
    }
    if (zsets.empty()) return {sep_degree::kind::infinite, 0};
    unsigned all = full;
    for (unsigned z : zsets) all &= z;
    if (all != 0) return {sep_degree::kind::infinite, 0};
    // Smallest subfamily with empty common-coordinate intersection, via BFS
    // over intersection states (at most 2^n <= 64 states).
    std::vector<int> dist(1u << n, -1);
    std::vector<unsigned> frontier;
    for (unsigned z : zsets)
        if (dist[z] < 0) { dist[z] = 1; frontier.push_back(z); }
    int depth = 1;
    while (dist[0] < 0 && !frontier.empty()) {
        std::vector<unsigned> next;
        for (unsigned s : frontier)
            for (unsigned z : zsets) {
                unsigned t = s & z;
                if (dist[t] < 0) { dist[t] = depth + 1; next.push_back(t); }
            }
        frontier = std::move(next);
        ++depth;
    }
    int mu = dist[0];   // reachable: the full intersection is empty
    if (mu <= 2) return {sep_degree::kind::none, 0};
    return {sep_degree::kind::finite, mu - 1};
}

inline bool has_property(const bool_fn& f, const post_property& p) {
    switch (p.tag) {
        case prop_tag::bot_reproducing:     return is_bot_reproducing(f);
        case prop_tag::top_reproducing:     return is_top_reproducing(f);
        case prop_tag::monotone:            return is_monotone(f);
        case prop_tag::self_dual:           return is_self_dual(f);
        case prop_tag::linear:              return is_linear(f);
        case prop_tag::bot_separating:
            return separation_degree(f, 0).k == sep_degree::kind::infinite;
        case prop_tag::top_separating:
            return separation_degree(f, 1).k == sep_degree::kind::infinite;
        case prop_tag::bot_separating_deg: {
            expect(p.degree && *p.degree >= 2, errc::bad_input, "separating degree must be >= 2");
            return separation_degree(f, 0).at_least(*p.degree);
        }
        case prop_tag::top_separating_deg: {
            expect(p.degree && *p.degree >= 2, errc::bad_input, "separating degree must be >= 2");
            return separation_degree(f, 1).at_least(*p.degree);
        }
        case prop_tag::disjunction_or_constant: return is_disjunction_or_constant(f);
        case prop_tag::conjunction_or_constant: return is_conjunction_or_constant(f);
        case prop_tag::at_most_one_variable:    return essential_var_count(f) <= 1;
        case prop_tag::projection_or_constant:  return is_projection_or_constant(f);
    }
    return false;
}

// Composition g(h_1,...,h_m) of an m-ary g with n-ary functions, computed
// columnwise on the packed tables.
inline std::uint64_t compose_tables(const bool_fn& g, const std::vector<std::uint64_t>& hs,
                                    int n) {
    std::uint64_t mask = table_mask(n);
    std::uint64_t out = 0;
    for (unsigned t = 0; t < (1u << g.arity); ++t) {
        if (!((g.table >> t) & 1)) continue;
        std::uint64_t cell = mask;
        for (int j = 0; j < g.arity; ++j)
            cell &= (t >> j) & 1 ? hs[j] : ~hs[j];
        out |= cell;
    }
    return out & mask;
}

} // namespace clonekit
