#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "clonekit/formula.hpp"

namespace clonekit {

// ---------------------------------------------------------------------------
// Modal formulas
// ---------------------------------------------------------------------------

class mformula;
using mformula_ptr = std::shared_ptr<const mformula>;

// A defined operator: a template formula whose placeholders are its variables
// in canonical (sorted) order.
struct defined_op {
    std::string name;
    mformula_ptr definition;
    std::vector<std::string> params;
};

class mformula {
public:
    enum class kind { var, apply, dia, box, defined };

    kind k;
    std::string name;                            // for var
    connective conn;                             // for apply
    std::shared_ptr<const defined_op> op;        // for defined
    std::vector<mformula_ptr> args;

    static mformula_ptr var(std::string n) {
        auto f = std::make_shared<mformula>();
        f->k = kind::var;
        f->name = std::move(n);
        return f;
    }
    static mformula_ptr apply(connective c, std::vector<mformula_ptr> args) {
        expect(static_cast<int>(args.size()) == c.fn.arity, errc::arity_mismatch,
               "connective " + c.name + " expects " + std::to_string(c.fn.arity) +
                   " arguments");
        auto f = std::make_shared<mformula>();
        f->k = kind::apply;
        f->conn = std::move(c);
        f->args = std::move(args);
        return f;
    }
    static mformula_ptr dia(mformula_ptr a) {
        auto f = std::make_shared<mformula>();
        f->k = kind::dia;
        f->args = {std::move(a)};
        return f;
    }
    static mformula_ptr box(mformula_ptr a) {
        auto f = std::make_shared<mformula>();
        f->k = kind::box;
        f->args = {std::move(a)};
        return f;
    }
    static mformula_ptr defined(std::shared_ptr<const defined_op> op,
                                std::vector<mformula_ptr> args) {
        expect(args.size() == op->params.size(), errc::arity_mismatch,
               "operator " + op->name + " expects " + std::to_string(op->params.size()) +
                   " arguments");
        auto f = std::make_shared<mformula>();
        f->k = kind::defined;
        f->op = std::move(op);
        f->args = std::move(args);
        return f;
    }
};

inline std::vector<std::string> sorted_vars(const mformula_ptr& f) {
    std::set<std::string> s;
    auto go = [&](auto&& self, const mformula_ptr& n) -> void {
        if (n->k == mformula::kind::var) s.insert(n->name);
        for (const auto& a : n->args) self(self, a);
    };
    go(go, f);
    return {s.begin(), s.end()};
}

inline std::shared_ptr<const defined_op> make_defined_op(std::string name,
                                                         mformula_ptr definition) {
    auto op = std::make_shared<defined_op>();
    op->name = std::move(name);
    op->definition = std::move(definition);
    op->params = sorted_vars(op->definition);
    return op;
}

// Syntactic substitution; defined operators are closed templates, so the map
// descends into arguments only.
inline mformula_ptr substitute(const mformula_ptr& f,
                               const std::map<std::string, mformula_ptr>& sigma) {
    switch (f->k) {
        case mformula::kind::var: {
            auto it = sigma.find(f->name);
            return it == sigma.end() ? f : it->second;
        }
        case mformula::kind::apply: {
            std::vector<mformula_ptr> args;
            for (const auto& a : f->args) args.push_back(substitute(a, sigma));
            return mformula::apply(f->conn, std::move(args));
        }
        case mformula::kind::dia: return mformula::dia(substitute(f->args[0], sigma));
        case mformula::kind::box: return mformula::box(substitute(f->args[0], sigma));
        case mformula::kind::defined: {
            std::vector<mformula_ptr> args;
            for (const auto& a : f->args) args.push_back(substitute(a, sigma));
            return mformula::defined(f->op, std::move(args));
        }
    }
    return f;
}

// Recursive replacement of every defined-operator node by its instantiated
// definition; the result contains only core nodes.
inline mformula_ptr expand(const mformula_ptr& f) {
    switch (f->k) {
        case mformula::kind::var: return f;
        case mformula::kind::apply: {
            std::vector<mformula_ptr> args;
            for (const auto& a : f->args) args.push_back(expand(a));
            return mformula::apply(f->conn, std::move(args));
        }
        case mformula::kind::dia: return mformula::dia(expand(f->args[0]));
        case mformula::kind::box: return mformula::box(expand(f->args[0]));
        case mformula::kind::defined: {
            std::map<std::string, mformula_ptr> sigma;
            for (std::size_t i = 0; i < f->args.size(); ++i)
                sigma[f->op->params[i]] = expand(f->args[i]);
            return substitute(expand(f->op->definition), sigma);
        }
    }
    return f;
}

// ---------------------------------------------------------------------------
// Kripke models
// ---------------------------------------------------------------------------

struct kripke_model {
    std::vector<std::string> worlds;
    std::vector<std::vector<int>> succ;          // adjacency by index
    std::vector<std::set<std::string>> val;      // true variables per world

    int world_index(const std::string& w) const {
        for (std::size_t i = 0; i < worlds.size(); ++i)
            if (worlds[i] == w) return static_cast<int>(i);
        fail(errc::unknown_world, "no world named '" + w + "'");
    }

    bool edge(int u, int v) const {
        return std::find(succ[u].begin(), succ[u].end(), v) != succ[u].end();
    }

    static kripke_model make(std::vector<std::string> worlds,
                             const std::vector<std::pair<int, int>>& edges,
                             std::vector<std::set<std::string>> val) {
        kripke_model m;
        m.worlds = std::move(worlds);
        m.succ.assign(m.worlds.size(), {});
        m.val = std::move(val);
        m.val.resize(m.worlds.size());
        for (auto [u, v] : edges) {
            expect(u >= 0 && v >= 0 && u < static_cast<int>(m.worlds.size()) &&
                       v < static_cast<int>(m.worlds.size()),
                   errc::unknown_world, "edge endpoint out of range");
            if (!m.edge(u, v)) m.succ[u].push_back(v);
        }
        return m;
    }
};

struct pointed_model {
    kripke_model model;
    std::string world;
};

using truth_set = std::vector<char>;

namespace detail {

using env_map = std::map<std::string, truth_set>;

inline truth_set eval_sets(const kripke_model& m, const mformula_ptr& f, const env_map& env) {
    std::size_t n = m.worlds.size();
    switch (f->k) {
        case mformula::kind::var: {
            auto it = env.find(f->name);
            if (it != env.end()) return it->second;
            return truth_set(n, 0);   // variable absent from the universe: false
        }
        case mformula::kind::apply: {
            std::vector<truth_set> child;
            for (const auto& a : f->args) child.push_back(eval_sets(m, a, env));
            truth_set out(n, 0);
            for (std::size_t w = 0; w < n; ++w) {
                unsigned idx = 0;
                for (std::size_t i = 0; i < child.size(); ++i)
                    idx |= static_cast<unsigned>(child[i][w]) << i;
                out[w] = static_cast<char>(eval_index(f->conn.fn, idx));
            }
            return out;
        }
        case mformula::kind::dia: {
            auto c = eval_sets(m, f->args[0], env);
            truth_set out(n, 0);
            for (std::size_t w = 0; w < n; ++w)
                for (int v : m.succ[w])
                    if (c[v]) { out[w] = 1; break; }
            return out;
        }
        case mformula::kind::box: {
            auto c = eval_sets(m, f->args[0], env);
            truth_set out(n, 1);
            for (std::size_t w = 0; w < n; ++w)
                for (int v : m.succ[w])
                    if (!c[v]) { out[w] = 0; break; }
            return out;
        }
        case mformula::kind::defined: {
            // Lazy semantics: evaluate the template over the frame with each
            // placeholder revalued to its argument's truth set. Agrees with
            // evaluating the expansion, by the substitution truth lemma.
            env_map inner;
            for (std::size_t i = 0; i < f->args.size(); ++i)
                inner[f->op->params[i]] = eval_sets(m, f->args[i], env);
            return eval_sets(m, f->op->definition, inner);
        }
    }
    return truth_set(n, 0);
}

inline env_map base_env(const kripke_model& m) {
    env_map env;
    for (std::size_t w = 0; w < m.worlds.size(); ++w)
        for (const auto& v : m.val[w]) {
            auto& ts = env.try_emplace(v, truth_set(m.worlds.size(), 0)).first->second;
            ts[w] = 1;
        }
    return env;
}

} // namespace detail

inline truth_set satisfying_worlds(const kripke_model& m, const mformula_ptr& f) {
    return detail::eval_sets(m, f, detail::base_env(m));
}

inline int mc(const kripke_model& m, const std::string& world, const mformula_ptr& f) {
    int w = m.world_index(world);
    return satisfying_worlds(m, f)[w];
}

inline int mc(const pointed_model& pm, const mformula_ptr& f) {
    return mc(pm.model, pm.world, f);
}

// ---------------------------------------------------------------------------
// Sizes (defined operators count as atomic)
// ---------------------------------------------------------------------------

namespace detail {

struct modal_ids {
    std::map<std::vector<std::uint64_t>, int> canon;
    std::unordered_map<const mformula*, int> by_node;
    std::unordered_map<const defined_op*, int> op_ids;
    std::vector<std::uint64_t> tree_sizes;

    int op_id(const std::shared_ptr<const defined_op>& op) {
        auto it = op_ids.find(op.get());
        if (it != op_ids.end()) return it->second;
        int id = id_of(op->definition);
        op_ids[op.get()] = id;
        return id;
    }

    int id_of(const mformula_ptr& node) {
        auto it = by_node.find(node.get());
        if (it != by_node.end()) return it->second;
        std::vector<std::uint64_t> key;
        std::uint64_t tree = 1;
        switch (node->k) {
            case mformula::kind::var:
                key.push_back(0);
                for (char c : node->name) key.push_back(static_cast<unsigned char>(c));
                break;
            case mformula::kind::apply:
                key.push_back(1);
                key.push_back(node->conn.fn.table);
                key.push_back(static_cast<std::uint64_t>(node->conn.fn.arity));
                break;
            case mformula::kind::dia: key.push_back(2); break;
            case mformula::kind::box: key.push_back(3); break;
            case mformula::kind::defined:
                key.push_back(4);
                key.push_back(static_cast<std::uint64_t>(op_id(node->op)));
                break;
        }
        for (const auto& a : node->args) {
            int cid = id_of(a);
            key.push_back(static_cast<std::uint64_t>(cid) + (1ull << 32));
            tree += tree_sizes[cid];
        }
        auto [cit, inserted] = canon.try_emplace(key, static_cast<int>(canon.size()));
        if (inserted) tree_sizes.push_back(tree);
        by_node[node.get()] = cit->second;
        return cit->second;
    }
};

} // namespace detail

inline size_measure measure_modal(const mformula_ptr& f) {
    detail::modal_ids ids;
    int root = ids.id_of(f);
    // dag counts subformulas of f itself; operator definitions are atomic and
    // must not contribute their own subformulas
    std::set<int> reach;
    auto walk = [&](auto&& self, const mformula_ptr& n) -> void {
        reach.insert(ids.by_node.at(n.get()));
        for (const auto& a : n->args) self(self, a);
    };
    walk(walk, f);
    return {ids.tree_sizes[root], reach.size()};
}

inline int modal_depth(const mformula_ptr& f) {
    switch (f->k) {
        case mformula::kind::var: return 0;
        case mformula::kind::dia:
        case mformula::kind::box: return 1 + modal_depth(f->args[0]);
        case mformula::kind::defined: return modal_depth(expand(f));
        case mformula::kind::apply: {
            int d = 0;
            for (const auto& a : f->args) d = std::max(d, modal_depth(a));
            return d;
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Printer and parser
// ---------------------------------------------------------------------------

inline std::string print_modal(const mformula_ptr& f) {
    switch (f->k) {
        case mformula::kind::var: return f->name;
        case mformula::kind::dia: return "dia(" + print_modal(f->args[0]) + ")";
        case mformula::kind::box: return "box(" + print_modal(f->args[0]) + ")";
        case mformula::kind::defined:
        case mformula::kind::apply: {
            std::string s = f->k == mformula::kind::defined
                                ? f->op->name
                                : (f->conn.name.empty() ? print_fn_literal(f->conn.fn)
                                                        : f->conn.name);
            s += "(";
            for (std::size_t i = 0; i < f->args.size(); ++i) {
                if (i) s += ",";
                s += print_modal(f->args[i]);
            }
            s += ")";
            return s;
        }
    }
    return "?";
}

namespace detail {

// Modal text grammar: the propositional grammar extended with the prefixes
// <> / [] and the names dia / box; permissive over the whole catalog.
class modal_parser {
public:
    explicit modal_parser(const std::string& text) : text_(text) {}

    mformula_ptr parse() {
        skip_ws();
        auto f = level_imp();
        skip_ws();
        expect(at_ == text_.size(), errc::syntax_error,
               "trailing input at position " + std::to_string(at_));
        return f;
    }

private:
    const std::string& text_;
    std::size_t at_ = 0;

    void skip_ws() {
        while (at_ < text_.size() && (text_[at_] == ' ' || text_[at_] == '\t')) ++at_;
    }
    bool eat(const char* tok) {
        skip_ws();
        std::size_t len = std::char_traits<char>::length(tok);
        if (text_.compare(at_, len, tok) == 0) { at_ += len; return true; }
        return false;
    }
    bool peek_is(const char* tok) {
        skip_ws();
        return text_.compare(at_, std::char_traits<char>::length(tok), tok) == 0;
    }

    mformula_ptr binary(const char* name, mformula_ptr a, mformula_ptr b) {
        return mformula::apply({name, named(name)}, {std::move(a), std::move(b)});
    }

    mformula_ptr level_imp() {
        auto f = level_xor();
        while (true) {
            if (eat("<->")) f = binary("eq", f, level_xor());
            else if (eat("->")) f = binary("imp", f, level_xor());
            else break;
        }
        return f;
    }
    mformula_ptr level_xor() {
        auto f = level_or();
        while (true) {
            if (eat("-/>")) f = binary("nimp", f, level_or());
            else if (peek_is("^") && eat("^")) f = binary("xor", f, level_or());
            else break;
        }
        return f;
    }
    mformula_ptr level_or() {
        auto f = level_and();
        while (eat("|")) f = binary("or", f, level_and());
        return f;
    }
    mformula_ptr level_and() {
        auto f = prefix();
        while (eat("&")) f = binary("and", f, prefix());
        return f;
    }

    mformula_ptr prefix() {
        if (eat("<>")) return mformula::dia(prefix());
        if (eat("[]")) return mformula::box(prefix());
        if (eat("!") || eat("~")) return mformula::apply({"not", named("not")}, {prefix()});
        return atom();
    }

    mformula_ptr atom() {
        skip_ws();
        if (eat("(")) {
            auto f = level_imp();
            expect(eat(")"), errc::syntax_error,
                   "expected ')' at position " + std::to_string(at_));
            return f;
        }
        std::size_t start = at_;
        while (at_ < text_.size() && ident_char(text_[at_])) ++at_;
        expect(at_ > start, errc::syntax_error,
               "expected a formula at position " + std::to_string(start));
        std::string word = text_.substr(start, at_ - start);
        if (word == "dia" && peek_is("(")) {
            eat("(");
            auto f = level_imp();
            expect(eat(")"), errc::syntax_error, "expected ')'");
            return mformula::dia(f);
        }
        if (word == "box" && peek_is("(")) {
            eat("(");
            auto f = level_imp();
            expect(eat(")"), errc::syntax_error, "expected ')'");
            return mformula::box(f);
        }
        if (word == "top" || word == "bot")
            return mformula::apply({word, named(word)}, {mformula::var(first_var())});
        if (peek_is("(")) {
            auto fn = lookup_named(word);
            expect(fn.has_value(), errc::undeclared_connective,
                   "unknown connective '" + word + "'");
            eat("(");
            std::vector<mformula_ptr> args;
            args.push_back(level_imp());
            while (eat(",")) args.push_back(level_imp());
            expect(eat(")"), errc::syntax_error, "expected ')'");
            return mformula::apply({word, *fn}, std::move(args));
        }
        expect(!lookup_named(word), errc::syntax_error,
               "connective '" + word + "' needs arguments");
        return mformula::var(word);
    }

    std::string first_var() const {
        std::size_t i = 0;
        while (i < text_.size()) {
            if (ident_char(text_[i])) {
                std::size_t j = i;
                while (j < text_.size() && ident_char(text_[j])) ++j;
                std::string w = text_.substr(i, j - i);
                if (w != "dia" && w != "box" && !lookup_named(w)) return w;
                i = j;
            } else {
                ++i;
            }
        }
        return "p";
    }
};

} // namespace detail

inline mformula_ptr parse_modal(const std::string& text) {
    return detail::modal_parser(text).parse();
}

// ---------------------------------------------------------------------------
// Logic catalog: Makinson type and frame validation
// ---------------------------------------------------------------------------

enum class makinson { type_a, type_b, type_c };

inline char makinson_letter(makinson t) {
    switch (t) {
        case makinson::type_a: return 'A';
        case makinson::type_b: return 'B';
        case makinson::type_c: return 'C';
    }
    return '?';
}

struct modal_ops {
    bool dia = false;
    bool box = false;

    bool empty() const { return !dia && !box; }
    friend bool operator==(const modal_ops&, const modal_ops&) = default;
};

namespace detail {

inline bool frame_reflexive(const kripke_model& m) {
    for (std::size_t w = 0; w < m.worlds.size(); ++w)
        if (!m.edge(static_cast<int>(w), static_cast<int>(w))) return false;
    return true;
}
inline bool frame_serial(const kripke_model& m) {
    for (const auto& s : m.succ)
        if (s.empty()) return false;
    return true;
}
inline bool frame_transitive(const kripke_model& m) {
    int n = static_cast<int>(m.worlds.size());
    for (int u = 0; u < n; ++u)
        for (int v : m.succ[u])
            for (int w : m.succ[v])
                if (!m.edge(u, w)) return false;
    return true;
}
inline bool frame_symmetric(const kripke_model& m) {
    int n = static_cast<int>(m.worlds.size());
    for (int u = 0; u < n; ++u)
        for (int v : m.succ[u])
            if (!m.edge(v, u)) return false;
    return true;
}
inline bool frame_irreflexive(const kripke_model& m) {
    for (std::size_t w = 0; w < m.worlds.size(); ++w)
        if (m.edge(static_cast<int>(w), static_cast<int>(w))) return false;
    return true;
}
inline bool frame_acyclic(const kripke_model& m) {
    int n = static_cast<int>(m.worlds.size());
    std::vector<int> state(n, 0);
    auto dfs = [&](auto&& self, int u) -> bool {
        state[u] = 1;
        for (int v : m.succ[u]) {
            if (state[v] == 1) return false;
            if (state[v] == 0 && !self(self, v)) return false;
        }
        state[u] = 2;
        return true;
    };
    for (int u = 0; u < n; ++u)
        if (state[u] == 0 && !dfs(dfs, u)) return false;
    return true;
}
inline bool frame_empty(const kripke_model& m) {
    for (const auto& s : m.succ)
        if (!s.empty()) return false;
    return true;
}
inline bool frame_identity(const kripke_model& m) {
    int n = static_cast<int>(m.worlds.size());
    for (int u = 0; u < n; ++u) {
        if (m.succ[u].size() != 1 || m.succ[u][0] != u) return false;
    }
    return true;
}

} // namespace detail

struct logic_entry {
    std::string name;
    makinson type;
    bool (*frame_ok)(const kripke_model&);
};

inline const logic_entry& logic_catalog(const std::string& name) {
    static const std::vector<logic_entry> entries = {
        {"K", makinson::type_a, [](const kripke_model&) { return true; }},
        {"KD", makinson::type_a, detail::frame_serial},
        {"T", makinson::type_a, detail::frame_reflexive},
        {"K4", makinson::type_a, detail::frame_transitive},
        {"S4", makinson::type_a,
         [](const kripke_model& m) {
             return detail::frame_reflexive(m) && detail::frame_transitive(m);
         }},
        {"S5", makinson::type_a,
         [](const kripke_model& m) {
             return detail::frame_reflexive(m) && detail::frame_symmetric(m) &&
                    detail::frame_transitive(m);
         }},
        {"Triv", makinson::type_a, detail::frame_identity},
        {"Verum", makinson::type_b, detail::frame_empty},
        {"GL", makinson::type_c,
         [](const kripke_model& m) {
             return detail::frame_transitive(m) && detail::frame_irreflexive(m) &&
                    detail::frame_acyclic(m);
         }},
    };
    for (const auto& e : entries)
        if (e.name == name) return e;
    fail(errc::unsupported_logic, "no logic named '" + name + "' in the catalog");
}

inline makinson makinson_type(const std::string& logic) {
    return logic_catalog(logic).type;
}

// ---------------------------------------------------------------------------
// Clos: which Boolean functions the modal fragment can define
// ---------------------------------------------------------------------------

struct clos_result {
    bool exact;
    named_clone lower;
    named_clone upper;            // equals lower when exact
    std::vector<std::string> notes;
};

namespace detail {

struct clos_override {
    const char* logic;
    modal_ops ops;                // exact modal-operator shape it needs
    clone_family requires_fam;    // applies when this clone sits inside C
    const char* grants;           // catalog name of the attainable function
    const char* note;
};

// Cited logic-specific facts; they may refine a Type C interval but never
// contradict it. Currently the single GL fact: box x | dia box x is a
// GL-theorem, so top is attainable from disjunction once both operators are
// available.
inline const std::vector<clos_override>& clos_overrides() {
    static const std::vector<clos_override> v = {
        {"GL", {true, true}, clone_family::V2, "top",
         "top attainable: (box x | dia box x) <-> top holds in GL"},
    };
    return v;
}

} // namespace detail

inline named_clone clos_ceiling(const modal_ops& m, const named_clone& c,
                                const config& cfg) {
    if (m.dia && m.box) return join_clones(c, clone_of(clone_family::I), cfg);
    if (m.dia) return join_clones(c, clone_of(clone_family::I0), cfg);
    if (m.box) return join_clones(c, clone_of(clone_family::I1), cfg);
    return c;
}

inline clos_result clos(const std::string& logic, const modal_ops& m, const named_clone& c,
                        const config& cfg = default_config()) {
    const auto& entry = logic_catalog(logic);
    switch (entry.type) {
        case makinson::type_a:
            return {true, c, c, {}};
        case makinson::type_b: {
            auto up = clos_ceiling(m, c, cfg);
            return {true, up, up, {}};
        }
        case makinson::type_c: {
            auto up = clos_ceiling(m, c, cfg);
            clos_result r{c == up, c, up, {}};
            for (const auto& ov : detail::clos_overrides()) {
                if (ov.logic != entry.name || !(ov.ops == m)) continue;
                if (contains(c, clone_of(ov.requires_fam), cfg)) r.notes.push_back(ov.note);
            }
            return r;
        }
    }
    fail(errc::internal_inconsistency, "unhandled Makinson type");
}

// Lower endpoint strengthened by every applicable attainability fact; used to
// resolve expressive completeness inside a Type C gap.
inline named_clone clos_effective_lower(const std::string& logic, const modal_ops& m,
                                        const named_clone& c,
                                        const config& cfg = default_config()) {
    named_clone lower = c;
    const auto& entry = logic_catalog(logic);
    for (const auto& ov : detail::clos_overrides()) {
        if (ov.logic != entry.name || !(ov.ops == m)) continue;
        if (!contains(c, clone_of(ov.requires_fam), cfg)) continue;
        basis b = base_of(lower, cfg);
        b.add(named(ov.grants, cfg), ov.grants);
        lower = identify(b, cfg);
    }
    return lower;
}

// ---------------------------------------------------------------------------
// Simple fragments: containment and expressive completeness
// ---------------------------------------------------------------------------

struct simple_fragment {
    modal_ops ops;
    basis fns;
};

inline bool simple_leq(const simple_fragment& f1, const simple_fragment& f2,
                       const std::string& logic, const config& cfg = default_config()) {
    expect(f1.ops == f2.ops, errc::modal_set_mismatch,
           "containment is decided for fragments with the same modal operators");
    const auto& entry = logic_catalog(logic);
    expect(entry.type != makinson::type_c, errc::type_c_unsupported,
           "containment for Type C logics is not supported");
    auto c1 = clos(logic, f1.ops, identify(f1.fns, cfg), cfg);
    auto c2 = clos(logic, f2.ops, identify(f2.fns, cfg), cfg);
    return contains(c2.lower, c1.lower, cfg);
}

enum class tristate { yes, no, unknown };

inline const char* tristate_name(tristate t) {
    switch (t) {
        case tristate::yes: return "Yes";
        case tristate::no: return "No";
        case tristate::unknown: return "Unknown";
    }
    return "?";
}

inline tristate simple_complete(const simple_fragment& f, const std::string& logic,
                                const config& cfg = default_config()) {
    logic_catalog(logic);   // validates the name
    if (f.ops.empty()) return tristate::no;
    auto bf = clone_of(clone_family::BF);
    auto c = identify(f.fns, cfg);
    auto r = clos(logic, f.ops, c, cfg);
    if (r.exact) return r.lower == bf ? tristate::yes : tristate::no;
    if (!(r.upper == bf)) return tristate::no;
    if (clos_effective_lower(logic, f.ops, c, cfg) == bf) return tristate::yes;
    return tristate::unknown;
}

} // namespace clonekit
