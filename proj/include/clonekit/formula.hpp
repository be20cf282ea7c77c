#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "clonekit/clones.hpp"

namespace clonekit {

// ---------------------------------------------------------------------------
// Propositional formulas over a declared basis
// ---------------------------------------------------------------------------

struct connective {
    std::string name;
    bool_fn fn;

    friend bool operator==(const connective& a, const connective& b) {
        return a.fn == b.fn;   // identity is the function, not the display name
    }
};

class formula;
using formula_ptr = std::shared_ptr<const formula>;

class formula {
public:
    enum class kind { var, apply };

    kind k;
    std::string name;                 // variable name, for kind::var
    connective conn;                  // for kind::apply
    std::vector<formula_ptr> args;

    static formula_ptr var(std::string name) {
        auto f = std::make_shared<formula>();
        f->k = kind::var;
        f->name = std::move(name);
        return f;
    }

    static formula_ptr apply(connective c, std::vector<formula_ptr> args) {
        expect(static_cast<int>(args.size()) == c.fn.arity, errc::arity_mismatch,
               "connective " + c.name + " expects " + std::to_string(c.fn.arity) +
                   " arguments");
        auto f = std::make_shared<formula>();
        f->k = kind::apply;
        f->conn = std::move(c);
        f->args = std::move(args);
        return f;
    }
};

using assignment = std::map<std::string, int>;

inline void collect_vars(const formula_ptr& f, std::set<std::string>& out) {
    if (f->k == formula::kind::var) out.insert(f->name);
    else
        for (const auto& a : f->args) collect_vars(a, out);
}

inline std::vector<std::string> vars(const formula_ptr& f) {
    std::set<std::string> s;
    collect_vars(f, s);
    return {s.begin(), s.end()};
}

inline int evaluate(const formula_ptr& f, const assignment& v) {
    std::unordered_map<const formula*, int> memo;
    auto go = [&](auto&& self, const formula_ptr& node) -> int {
        auto it = memo.find(node.get());
        if (it != memo.end()) return it->second;
        int result;
        if (node->k == formula::kind::var) {
            auto vit = v.find(node->name);
            expect(vit != v.end(), errc::unbound_variable,
                   "variable '" + node->name + "' has no value");
            result = vit->second ? 1 : 0;
        } else {
            unsigned idx = 0;
            for (std::size_t i = 0; i < node->args.size(); ++i)
                idx |= static_cast<unsigned>(self(self, node->args[i])) << i;
            result = eval_index(node->conn.fn, idx);
        }
        memo[node.get()] = result;
        return result;
    };
    return go(go, f);
}

// Tree and dag size. Tree size counts occurrences of variables and
// connectives; dag size counts distinct subformulas up to structural
// equality (shared subtrees collapse, equal copies also collapse).
struct size_measure {
    std::uint64_t tree;
    std::uint64_t dag;
};

namespace detail {

// Hash-consing pass: assigns one id per structurally distinct subformula.
struct struct_ids {
    std::map<std::vector<std::uint64_t>, int> canon;
    std::unordered_map<const formula*, int> by_node;
    std::vector<std::uint64_t> tree_sizes;

    int id_of(const formula_ptr& node) {
        auto it = by_node.find(node.get());
        if (it != by_node.end()) return it->second;
        std::vector<std::uint64_t> key;
        std::uint64_t tree = 1;
        if (node->k == formula::kind::var) {
            key.push_back(0);
            for (char c : node->name) key.push_back(static_cast<unsigned char>(c));
        } else {
            key.push_back(1);
            key.push_back(node->conn.fn.table);
            key.push_back(static_cast<std::uint64_t>(node->conn.fn.arity));
            for (const auto& a : node->args) {
                int cid = id_of(a);
                key.push_back(static_cast<std::uint64_t>(cid) + 2);
                tree += tree_sizes[cid];
            }
        }
        auto [cit, inserted] = canon.try_emplace(key, static_cast<int>(canon.size()));
        if (inserted) tree_sizes.push_back(tree);
        by_node[node.get()] = cit->second;
        return cit->second;
    }
};

} // namespace detail

inline size_measure measure(const formula_ptr& f) {
    detail::struct_ids ids;
    int root = ids.id_of(f);
    return {ids.tree_sizes[root], ids.canon.size()};
}

inline bool_fn truth_table(const formula_ptr& f, const std::vector<std::string>& props,
                           const config& cfg = default_config()) {
    expect(!props.empty() && static_cast<int>(props.size()) <= cfg.arity_cap,
           errc::arity_out_of_range,
           "need between 1 and " + std::to_string(cfg.arity_cap) + " variables");
    auto fv = vars(f);
    for (const auto& v : fv)
        expect(std::find(props.begin(), props.end(), v) != props.end(),
               errc::unbound_variable, "formula variable '" + v + "' not among props");
    int n = static_cast<int>(props.size());
    std::uint64_t t = 0;
    for (unsigned i = 0; i < (1u << n); ++i) {
        assignment a;
        for (int k = 0; k < n; ++k) a[props[k]] = (i >> k) & 1;
        if (evaluate(f, a)) t |= 1ull << i;
    }
    return bool_fn{n, t};
}

// ---------------------------------------------------------------------------
// Printer (canonical prefix form) and parser
// ---------------------------------------------------------------------------

inline std::string print(const formula_ptr& f) {
    if (f->k == formula::kind::var) return f->name;
    std::string s = f->conn.name.empty() ? print_fn_literal(f->conn.fn) : f->conn.name;
    s += "(";
    for (std::size_t i = 0; i < f->args.size(); ++i) {
        if (i) s += ",";
        s += print(f->args[i]);
    }
    s += ")";
    return s;
}

namespace detail {

struct token {
    enum class type { ident, lparen, rparen, comma, op_not, op_and, op_or, op_xor,
                      op_nimp, op_imp, op_eq, end };
    type t;
    std::string text;
    std::size_t pos;
};

inline bool ident_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '\'';
}

inline std::vector<token> lex(const std::string& s) {
    std::vector<token> out;
    std::size_t i = 0;
    auto starts = [&](const char* p) {
        return s.compare(i, std::char_traits<char>::length(p), p) == 0;
    };
    while (i < s.size()) {
        char c = s[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') { ++i; continue; }
        using T = token::type;
        if (c == '(') { out.push_back({T::lparen, "(", i}); ++i; continue; }
        if (c == ')') { out.push_back({T::rparen, ")", i}); ++i; continue; }
        if (c == ',') { out.push_back({T::comma, ",", i}); ++i; continue; }
        if (c == '!' || c == '~') { out.push_back({T::op_not, s.substr(i, 1), i}); ++i; continue; }
        if (c == '&') { out.push_back({T::op_and, "&", i}); ++i; continue; }
        if (c == '|') { out.push_back({T::op_or, "|", i}); ++i; continue; }
        if (c == '^') { out.push_back({T::op_xor, "^", i}); ++i; continue; }
        if (starts("<->")) { out.push_back({T::op_eq, "<->", i}); i += 3; continue; }
        if (starts("->")) { out.push_back({T::op_imp, "->", i}); i += 2; continue; }
        if (starts("-/>")) { out.push_back({T::op_nimp, "-/>", i}); i += 3; continue; }
        // unicode connectives
        if (starts("¬")) { out.push_back({T::op_not, "¬", i}); i += 2; continue; }
        if (starts("∧")) { out.push_back({T::op_and, "∧", i}); i += 3; continue; }
        if (starts("∨")) { out.push_back({T::op_or, "∨", i}); i += 3; continue; }
        if (starts("⊕")) { out.push_back({T::op_xor, "⊕", i}); i += 3; continue; }
        if (starts("↛")) { out.push_back({T::op_nimp, "↛", i}); i += 3; continue; }
        if (starts("→")) { out.push_back({T::op_imp, "→", i}); i += 3; continue; }
        if (starts("↔")) { out.push_back({T::op_eq, "↔", i}); i += 3; continue; }
        if (starts("⊤")) { out.push_back({T::ident, "top", i}); i += 3; continue; }
        if (starts("⊥")) { out.push_back({T::ident, "bot", i}); i += 3; continue; }
        if (ident_char(c) ) {
            std::size_t j = i;
            while (j < s.size() && ident_char(s[j])) ++j;
            out.push_back({T::ident, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        fail(errc::syntax_error, "unexpected character '" + std::string(1, c) +
                                     "' at position " + std::to_string(i));
    }
    out.push_back({token::type::end, "", s.size()});
    return out;
}

// Parser for the fragment grammar: prefix applications name(args), infix
// sugar for the binary connectives and prefix negation, with precedence
// not > and > or > (xor, nimp) > (imp, eq), all left-associative.
class formula_parser {
public:
    formula_parser(const std::string& text, const basis& B, bool permissive,
                   const config& cfg)
        : toks_(lex(text)), basis_(B), permissive_(permissive), cfg_(cfg) {}

    formula_ptr parse() {
        auto f = level_imp();
        expect(peek().t == token::type::end, errc::syntax_error,
               "trailing input at position " + std::to_string(peek().pos));
        return f;
    }

private:
    std::vector<token> toks_;
    std::size_t at_ = 0;
    const basis& basis_;
    bool permissive_;
    const config& cfg_;
    std::vector<std::string> seen_vars_;

    const token& peek() const { return toks_[at_]; }
    token next() { return toks_[at_++]; }

    connective resolve(const std::string& name, std::size_t pos) {
        for (const auto& e : basis_.entries)
            if (e.name == name) return {name, e.fn};
        if (auto f = lookup_named(name)) {
            if (permissive_ || basis_.contains_fn(*f)) return {name, *f};
            fail(errc::undeclared_connective,
                 "connective '" + name + "' not declared in the basis (position " +
                     std::to_string(pos) + ")");
        }
        fail(errc::undeclared_connective,
             "unknown connective '" + name + "' at position " + std::to_string(pos));
    }

    formula_ptr make_infix(const std::string& name, formula_ptr a, formula_ptr b,
                           std::size_t pos) {
        auto c = resolve(name, pos);
        expect(c.fn.arity == 2, errc::arity_mismatch, "infix connective must be binary");
        return formula::apply(c, {std::move(a), std::move(b)});
    }

    formula_ptr level_imp() {
        auto f = level_xor();
        while (peek().t == token::type::op_imp || peek().t == token::type::op_eq) {
            auto t = next();
            f = make_infix(t.t == token::type::op_imp ? "imp" : "eq", f, level_xor(), t.pos);
        }
        return f;
    }

    formula_ptr level_xor() {
        auto f = level_or();
        while (peek().t == token::type::op_xor || peek().t == token::type::op_nimp) {
            auto t = next();
            f = make_infix(t.t == token::type::op_xor ? "xor" : "nimp", f, level_or(), t.pos);
        }
        return f;
    }

    formula_ptr level_or() {
        auto f = level_and();
        while (peek().t == token::type::op_or) {
            auto t = next();
            f = make_infix("or", f, level_and(), t.pos);
        }
        return f;
    }

    formula_ptr level_and() {
        auto f = level_not();
        while (peek().t == token::type::op_and) {
            auto t = next();
            f = make_infix("and", f, level_not(), t.pos);
        }
        return f;
    }

    formula_ptr level_not() {
        if (peek().t == token::type::op_not) {
            auto t = next();
            auto c = resolve("not", t.pos);
            return formula::apply(c, {level_not()});
        }
        return atom();
    }

    // The constants top/bot are unary connectives; written bare they get the
    // first variable of the formula (or "p") as their argument.
    formula_ptr constant_atom(const std::string& name, std::size_t pos) {
        auto c = resolve(name, pos);
        std::string v = seen_vars_.empty() ? guess_var() : seen_vars_.front();
        return formula::apply(c, {formula::var(v)});
    }

    std::string guess_var() const {
        for (const auto& t : toks_)
            if (t.t == token::type::ident && !lookup_named(t.text) &&
                !basis_has_name(t.text))
                return t.text;
        return "p";
    }

    bool basis_has_name(const std::string& n) const {
        for (const auto& e : basis_.entries)
            if (e.name == n) return true;
        return false;
    }

    formula_ptr atom() {
        auto t = next();
        using T = token::type;
        if (t.t == T::lparen) {
            auto f = level_imp();
            expect(peek().t == T::rparen, errc::syntax_error,
                   "expected ')' at position " + std::to_string(peek().pos));
            next();
            return f;
        }
        expect(t.t == T::ident, errc::syntax_error,
               "expected a variable, connective or '(' at position " +
                   std::to_string(t.pos));
        if (peek().t == T::lparen) {
            auto c = resolve(t.text, t.pos);
            next();   // (
            std::vector<formula_ptr> args;
            if (peek().t != T::rparen) {
                args.push_back(level_imp());
                while (peek().t == T::comma) {
                    next();
                    args.push_back(level_imp());
                }
            }
            expect(peek().t == T::rparen, errc::syntax_error,
                   "expected ')' at position " + std::to_string(peek().pos));
            next();
            expect(static_cast<int>(args.size()) == c.fn.arity, errc::arity_mismatch,
                   "connective '" + c.name + "' expects " +
                       std::to_string(c.fn.arity) + " arguments, got " +
                       std::to_string(args.size()));
            return formula::apply(c, std::move(args));
        }
        if (t.text == "top" || t.text == "bot") return constant_atom(t.text, t.pos);
        // a plain identifier that names a known connective of arity > 0 without
        // arguments is a variable only if it is not a catalog name
        if (lookup_named(t.text) && !basis_has_name(t.text))
            fail(errc::syntax_error, "connective '" + t.text +
                                         "' needs arguments at position " +
                                         std::to_string(t.pos));
        seen_vars_.push_back(t.text);
        return formula::var(t.text);
    }
};

} // namespace detail

// Parse over a declared basis; every connective must belong to B.
inline formula_ptr parse(const std::string& text, const basis& B,
                         const config& cfg = default_config()) {
    return detail::formula_parser(text, B, false, cfg).parse();
}

// Parse with the whole catalog available (used where a formula may range over
// any basis, e.g. expressibility inputs).
inline formula_ptr parse_any(const std::string& text, const config& cfg = default_config()) {
    basis empty;
    return detail::formula_parser(text, empty, true, cfg).parse();
}

} // namespace clonekit
