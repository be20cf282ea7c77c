#pragma once

// Out-of-line parts of the teaching/learning machinery.

#include "clonekit/teachlearn.hpp"

namespace clonekit {

// ---------------------------------------------------------------------------
// Modal formula enumeration with signature deduplication
// ---------------------------------------------------------------------------

namespace detail {

// Semantics of a formula over the whole family: one truth set per model.
using family_sem = std::vector<truth_set>;

inline family_sem sem_of(const mformula_ptr& f, const std::vector<pointed_model>& family) {
    family_sem s;
    s.reserve(family.size());
    for (const auto& pm : family) s.push_back(satisfying_worlds(pm.model, f));
    return s;
}

inline std::vector<char> points_of(const family_sem& s,
                                   const std::vector<pointed_model>& family) {
    std::vector<char> sig(family.size());
    for (std::size_t i = 0; i < family.size(); ++i)
        sig[i] = s[i][family[i].model.world_index(family[i].world)];
    return sig;
}

struct modal_candidates {
    std::vector<mformula_ptr> reps;           // one per semantic class on the family
    std::vector<std::vector<char>> sigs;      // truth at the designated points
};

inline modal_candidates enumerate_fragment(const modal_fragment& fragment,
                                           const std::vector<std::string>& props,
                                           int depth_bound, int size_cap,
                                           const std::vector<pointed_model>& family) {
    struct item {
        mformula_ptr f;
        family_sem sem;
        int size;
        int depth;
    };
    std::vector<item> items;
    std::map<family_sem, std::size_t> seen;

    auto flat = [&](const kripke_model& m, int bit) {
        return truth_set(m.worlds.size(), static_cast<char>(bit));
    };
    auto try_add = [&](mformula_ptr f, family_sem sem, int size, int depth) {
        auto [it, inserted] = seen.try_emplace(std::move(sem), items.size());
        if (!inserted) return;
        items.push_back({std::move(f), it->first, size, depth});
    };

    for (const auto& p : props) {
        family_sem s;
        for (const auto& pm : family) {
            truth_set t(pm.model.worlds.size(), 0);
            for (std::size_t w = 0; w < pm.model.worlds.size(); ++w)
                if (pm.model.val[w].count(p)) t[w] = 1;
            s.push_back(std::move(t));
        }
        try_add(mformula::var(p), std::move(s), 1, 0);
    }
    for (const auto& e : fragment.fns.entries) {
        expect(e.fn.arity <= 2 || is_constant(e.fn), errc::bad_input,
               "fragment enumeration supports connectives of arity <= 2");
        if (e.fn.arity == 1 && is_constant(e.fn)) {
            family_sem s;
            for (const auto& pm : family) s.push_back(flat(pm.model, e.fn.table ? 1 : 0));
            try_add(mformula::apply({e.name.empty() ? print_fn_literal(e.fn) : e.name, e.fn},
                                    {mformula::var(props[0])}),
                    std::move(s), 1, 0);
        }
    }

    auto apply_modal = [&](const family_sem& child, bool is_box) {
        family_sem s;
        s.reserve(family.size());
        for (std::size_t m = 0; m < family.size(); ++m) {
            const auto& model = family[m].model;
            truth_set t(model.worlds.size(), static_cast<char>(is_box ? 1 : 0));
            for (std::size_t w = 0; w < model.worlds.size(); ++w)
                for (int v : model.succ[w]) {
                    if (is_box) {
                        if (!child[m][v]) { t[w] = 0; break; }
                    } else if (child[m][v]) {
                        t[w] = 1;
                        break;
                    }
                }
            s.push_back(std::move(t));
        }
        return s;
    };
    auto apply_fn = [&](const bool_fn& fn, const family_sem* a, const family_sem* b) {
        family_sem s;
        s.reserve(family.size());
        for (std::size_t m = 0; m < family.size(); ++m) {
            std::size_t worlds = family[m].model.worlds.size();
            truth_set t(worlds, 0);
            for (std::size_t w = 0; w < worlds; ++w) {
                unsigned idx = static_cast<unsigned>((*a)[m][w]);
                if (b) idx |= static_cast<unsigned>((*b)[m][w]) << 1;
                t[w] = static_cast<char>(eval_index(fn, idx));
            }
            s.push_back(std::move(t));
        }
        return s;
    };

    // grow semi-naively: every new formula must involve at least one item from
    // the previous round
    std::size_t scanned = 0;
    while (scanned < items.size()) {
        std::size_t cur = items.size();
        for (std::size_t i = scanned; i < cur; ++i) {
            if (items[i].depth + 1 <= depth_bound && items[i].size + 1 <= size_cap) {
                if (fragment.ops.dia)
                    try_add(mformula::dia(items[i].f), apply_modal(items[i].sem, false),
                            items[i].size + 1, items[i].depth + 1);
                if (fragment.ops.box)
                    try_add(mformula::box(items[i].f), apply_modal(items[i].sem, true),
                            items[i].size + 1, items[i].depth + 1);
            }
        }
        for (const auto& e : fragment.fns.entries) {
            if (e.fn.arity == 1 && is_constant(e.fn)) continue;
            connective conn{e.name.empty() ? print_fn_literal(e.fn) : e.name, e.fn};
            if (e.fn.arity == 1) {
                for (std::size_t i = scanned; i < cur; ++i) {
                    if (items[i].size + 1 > size_cap) continue;
                    try_add(mformula::apply(conn, {items[i].f}),
                            apply_fn(e.fn, &items[i].sem, nullptr), items[i].size + 1,
                            items[i].depth);
                }
            } else {
                for (std::size_t i = 0; i < cur; ++i) {
                    std::size_t jstart = i < scanned ? scanned : 0;
                    for (std::size_t j = jstart; j < cur; ++j) {
                        int size = 1 + items[i].size + items[j].size;
                        if (size > size_cap) continue;
                        try_add(mformula::apply(conn, {items[i].f, items[j].f}),
                                apply_fn(e.fn, &items[i].sem, &items[j].sem), size,
                                std::max(items[i].depth, items[j].depth));
                    }
                }
            }
        }
        scanned = cur;
    }

    modal_candidates out;
    for (auto& it : items) {
        out.reps.push_back(it.f);
        out.sigs.push_back(points_of(it.sem, family));
    }
    return out;
}

} // namespace detail

inline modal_unique_result verify_unique_modal(const mformula_ptr& f,
                                               const teaching_set& examples,
                                               const modal_fragment& fragment,
                                               const std::vector<std::string>& props,
                                               int bound, const config& cfg) {
    expect(bound >= modal_depth(f) + 1, errc::bound_too_small,
           "bound must exceed the target's modal depth");
    auto family = detail::model_family(props, bound, cfg);
    int size_cap = std::max(bound + 4, 9);
    auto cands = detail::enumerate_fragment(fragment, props, bound, size_cap, family);
    auto fsig = detail::points_of(detail::sem_of(f, family), family);

    for (const auto& ex : examples)
        expect(ex.kind == labeled_example::payload::modal, errc::kind_mismatch,
               "propositional example in a modal teaching set");
    auto fits_all = [&](const mformula_ptr& g) {
        for (const auto& ex : examples)
            if (mc(ex.pm, g) != ex.label) return false;
        return true;
    };
    if (!fits_all(f)) return {modal_unique_result::status::not_fitting, "", std::nullopt};

    for (std::size_t i = 0; i < cands.reps.size(); ++i) {
        if (cands.sigs[i] == fsig) continue;
        if (!fits_all(cands.reps[i])) continue;
        // sound refutation: a family model on which target and rival differ
        for (std::size_t m = 0; m < family.size(); ++m)
            if (cands.sigs[i][m] != fsig[m])
                return {modal_unique_result::status::ambiguous,
                        print_modal(cands.reps[i]), family[m]};
        fail(errc::internal_inconsistency, "distinct signatures with no separating model");
    }
    return {modal_unique_result::status::unique_up_to_bound, "", std::nullopt};
}

// ---------------------------------------------------------------------------
// teach_modal
// ---------------------------------------------------------------------------

inline teaching_set teach_modal(const mformula_ptr& f, const std::vector<std::string>& props,
                                const config& cfg) {
    expect(!props.empty(), errc::bad_input, "prop set must be nonempty");
    auto form = detail::to_prefix_form(f);
    detail::normalize_prefix(form);
    if (form.c == detail::prefix_form::core::pos || form.c == detail::prefix_form::core::neg)
        expect(std::find(props.begin(), props.end(), form.var) != props.end(),
               errc::bad_input, "target variable not among the declared props");

    int n = static_cast<int>(form.prefix.size());
    teaching_set out;
    using core = detail::prefix_form::core;

    if (form.c == core::pos || form.c == core::neg) {
        auto marked = detail::bare_chain(n, props, n, form.var);
        auto bare = detail::bare_chain(n, props);
        int pos_label = form.c == core::pos ? 1 : 0;
        out.push_back(labeled_example::of(pointed_model{marked, "w0"}, pos_label));
        out.push_back(labeled_example::of(pointed_model{bare, "w0"}, 1 - pos_label));
    } else {
        int lab = form.c == core::top ? 1 : 0;
        auto loop_bare = kripke_model::make({"w0"}, {{0, 0}}, {{}});
        std::set<std::string> all(props.begin(), props.end());
        auto loop_full = kripke_model::make({"w0"}, {{0, 0}}, {all});
        out.push_back(labeled_example::of(pointed_model{loop_bare, "w0"}, lab));
        out.push_back(labeled_example::of(pointed_model{loop_full, "w0"}, lab));
        out.push_back(labeled_example::of(pointed_model{detail::bare_chain(n, props), "w0"},
                                          lab));
        // chain with a loop at the tail world and one world beyond it
        std::vector<std::string> worlds;
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i <= n + 1; ++i) worlds.push_back("w" + std::to_string(i));
        for (int i = 0; i < n; ++i) edges.push_back({i, i + 1});
        edges.push_back({n, n});
        edges.push_back({n, n + 1});
        auto looped = kripke_model::make(worlds, edges, std::vector<std::set<std::string>>(n + 2));
        out.push_back(labeled_example::of(pointed_model{looped, "w0"}, lab));
    }

    // bare truncated chains pin each prefix position
    for (int j = 0; j < n; ++j) {
        pointed_model pm{detail::bare_chain(j, props), "w0"};
        out.push_back(labeled_example::of(pointed_model{pm.model, "w0"}, mc(pm, f)));
    }

    // refine until the bounded verifier is satisfied
    modal_fragment fragment{{true, true}, basis({"not", "top"})};
    int bound = modal_depth(f) + 1;
    for (int round = 0; round < 64; ++round) {
        auto r = verify_unique_modal(f, out, fragment, props, bound, cfg);
        expect(r.st != modal_unique_result::status::not_fitting, errc::internal_inconsistency,
               "teaching example mislabeled");
        if (r.st == modal_unique_result::status::unique_up_to_bound) return out;
        out.push_back(labeled_example::of(*r.distinguishing, mc(*r.distinguishing, f)));
    }
    fail(errc::internal_inconsistency, "teaching refinement failed to converge");
}

// ---------------------------------------------------------------------------
// PC reductions
// ---------------------------------------------------------------------------

namespace detail {

inline void check_connectives(const formula_ptr& f, const std::vector<bool_fn>& allowed) {
    if (f->k == formula::kind::var) return;
    bool ok = false;
    for (const auto& g : allowed)
        if (f->conn.fn == g) ok = true;
    expect(ok, errc::not_in_source_fragment,
           "connective '" + f->conn.name + "' outside the reduction's source fragment");
    for (const auto& a : f->args) check_connectives(a, allowed);
}

inline formula_ptr aimp_node(formula_ptr a, formula_ptr b, formula_ptr c) {
    return formula::apply({"aimp", named("aimp")},
                          {std::move(a), std::move(b), std::move(c)});
}

inline formula_ptr aimp_transform(const formula_ptr& f, const formula_ptr& w) {
    if (f->k == formula::kind::var) return f;
    if (f->conn.fn == named("and"))
        return aimp_node(aimp_transform(f->args[0], w), w, aimp_transform(f->args[1], w));
    return aimp_node(w, aimp_transform(f->args[0], w), aimp_transform(f->args[1], w));
}

inline formula_ptr oxor_node(formula_ptr a, formula_ptr b, formula_ptr c) {
    return formula::apply({"oxor", named("oxor")},
                          {std::move(a), std::move(b), std::move(c)});
}

// A formula computing the parity of an even list of variables wherever the
// guard w is false (its value where w is true does not matter: the enclosing
// oxor is already true there).
inline formula_ptr oxor_even(const std::vector<std::string>& vars, std::size_t lo,
                             std::size_t hi, const formula_ptr& w) {
    if (hi - lo == 2)
        return oxor_node(w, formula::var(vars[lo]), formula::var(vars[lo + 1]));
    return oxor_node(w, oxor_even(vars, lo, hi - 2, w),
                     oxor_node(w, formula::var(vars[hi - 2]), formula::var(vars[hi - 1])));
}

inline mformula_ptr to_modal(const formula_ptr& f,
                             const std::map<std::string, mformula_ptr>& leafmap) {
    if (f->k == formula::kind::var) return leafmap.at(f->name);
    std::vector<mformula_ptr> args;
    for (const auto& a : f->args) args.push_back(to_modal(a, leafmap));
    return mformula::apply(f->conn, std::move(args));
}

} // namespace detail

inline pc_image pc_reduce(pc_kind kind, const formula_ptr& f, const config& cfg) {
    auto fv = vars(f);
    switch (kind) {
        case pc_kind::aimp: {
            detail::check_connectives(f, {named("and"), named("imp")});
            expect(std::find(fv.begin(), fv.end(), "w") == fv.end(), errc::bad_input,
                   "the guard variable w must not occur in the source formula");
            auto w = formula::var("w");
            auto image = detail::aimp_node(w, w, detail::aimp_transform(f, w));
            return {image, nullptr, "h(V) = V with w set to 1"};
        }
        case pc_kind::oxor: {
            detail::check_connectives(f, {named("xor3"), named("xor")});
            expect(std::find(fv.begin(), fv.end(), "w") == fv.end(), errc::bad_input,
                   "the guard variable w must not occur in the source formula");
            expect(!fv.empty() && static_cast<int>(fv.size()) <= cfg.arity_cap,
                   errc::arity_out_of_range, "source variable count out of range");
            auto form = detail::extract_affine(f, fv);
            expect(form.c0 == 0 && form.coeffs.size() % 2 == 1,
                   errc::not_in_source_fragment,
                   "source must be an odd parity of variables");
            auto w = formula::var("w");
            formula_ptr image;
            if (form.coeffs.size() == 1) {
                image = detail::oxor_node(w, w, formula::var(form.coeffs[0]));
            } else {
                std::vector<std::string> rest(form.coeffs.begin() + 1, form.coeffs.end());
                image = detail::oxor_node(
                    w, formula::var(form.coeffs[0]),
                    detail::oxor_even(rest, 0, rest.size(), w));
            }
            return {image, nullptr, "h(V) = V with w set to 0"};
        }
        case pc_kind::modal_diamond:
        case pc_kind::modal_box: {
            expect(!fv.empty(), errc::bad_input, "source formula needs a variable");
            std::map<std::string, mformula_ptr> leafmap;
            for (std::size_t i = 0; i < fv.size(); ++i) {
                mformula_ptr leaf = mformula::var("p");
                for (std::size_t d = 0; d < i; ++d)
                    leaf = kind == pc_kind::modal_diamond ? mformula::dia(leaf)
                                                          : mformula::box(leaf);
                leafmap[fv[i]] = leaf;
            }
            return {nullptr, detail::to_modal(f, leafmap),
                    "h(V) = the chain of " + std::to_string(fv.size()) +
                        " worlds, world i labeled p iff V(p_i), pointed at 0"};
        }
    }
    fail(errc::internal_inconsistency, "unhandled reduction kind");
}

namespace detail {

inline kripke_model value_chain(unsigned mask, int n, bool shift_labels) {
    std::vector<std::string> worlds;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::set<std::string>> val(n);
    for (int i = 0; i < n; ++i) {
        worlds.push_back("w" + std::to_string(i));
        if (i + 1 < n) edges.push_back({i, i + 1});
        int bit = shift_labels ? (i + 1) % n : i;
        if ((mask >> bit) & 1) val[i].insert("p");
    }
    return kripke_model::make(worlds, edges, val);
}

} // namespace detail

inline pc_report verify_pc(pc_kind kind, int n, int model_bound, bool mutate,
                           const config& cfg) {
    expect(n >= 1 && n <= 3, errc::bad_input, "condition checks are exhaustive for n <= 3");
    std::vector<std::string> props;
    for (int i = 0; i < n; ++i) props.push_back("p" + std::to_string(i));

    basis source;
    switch (kind) {
        case pc_kind::aimp: source = basis({"and", "imp"}); break;
        case pc_kind::oxor: source = basis({"xor3"}); break;
        case pc_kind::modal_diamond:
        case pc_kind::modal_box: source = basis({"and", "not"}); break;
    }
    auto closure = close_with_witnesses(source, props, cfg);
    std::size_t cc = closure.fns.size();
    expect(cc <= 256, errc::internal_inconsistency, "concept class larger than expected");

    auto describe = [&](const formula_ptr& fml, unsigned mask) {
        std::string a;
        for (int k = 0; k < n; ++k)
            a += props[k] + "=" + std::to_string((mask >> k) & 1) + " ";
        return "concept " + print(fml) + " at " + a;
    };

    if (kind == pc_kind::aimp || kind == pc_kind::oxor) {
        int w_true = kind == pc_kind::aimp ? 1 : 0;
        if (mutate) w_true = 1 - w_true;
        int guard_value = kind == pc_kind::aimp ? 0 : 1;   // image forced on the other side

        std::vector<formula_ptr> images(cc);
        for (std::size_t i = 0; i < cc; ++i)
            images[i] = pc_reduce(kind, closure.witnesses[i], cfg).prop;
        // condition 1 plus the guard contract
        for (std::size_t i = 0; i < cc; ++i) {
            for (unsigned v = 0; v < (1u << n); ++v) {
                assignment a = detail::mask_assignment(props, v);
                a["w"] = w_true;
                if (evaluate(images[i], a) != eval_index(closure.fns[i], v))
                    return {false, false,
                            "condition 1 fails: " + describe(closure.witnesses[i], v)};
                a["w"] = 1 - w_true;
                if (evaluate(images[i], a) != guard_value)
                    return {false, false,
                            "guard contract fails: " + describe(closure.witnesses[i], v)};
            }
        }
        // condition 2: every extended assignment behaves like nothing, like
        // everything, or like some source assignment
        std::vector<std::bitset<256>> source_sets(1u << n);
        for (unsigned v = 0; v < (1u << n); ++v)
            for (std::size_t i = 0; i < cc; ++i)
                source_sets[v][i] = eval_index(closure.fns[i], v);
        for (unsigned e = 0; e < (1u << (n + 1)); ++e) {
            assignment a = detail::mask_assignment(props, e & ((1u << n) - 1));
            a["w"] = (e >> n) & 1;
            std::bitset<256> s;
            for (std::size_t i = 0; i < cc; ++i) s[i] = evaluate(images[i], a);
            bool ok = s.none();
            if (!ok) {
                std::bitset<256> all;
                for (std::size_t i = 0; i < cc; ++i) all[i] = true;
                ok = (s == all);
            }
            for (unsigned v = 0; !ok && v < (1u << n); ++v) ok = (s == source_sets[v]);
            if (!ok)
                return {false, false,
                        "condition 2 fails on the extended assignment with w=" +
                            std::to_string((e >> n) & 1)};
        }
        return {true, false, ""};
    }

    // modal kinds
    std::vector<mformula_ptr> images(cc);
    for (std::size_t i = 0; i < cc; ++i)
        images[i] = pc_reduce(kind, closure.witnesses[i], cfg).modal;

    // condition 1: the image evaluated on the value chain equals the source value
    for (std::size_t i = 0; i < cc; ++i)
        for (unsigned v = 0; v < (1u << n); ++v) {
            auto chain = detail::value_chain(v, n, mutate);
            if (mc(chain, "w0", images[i]) != eval_index(closure.fns[i], v))
                return {false, true,
                        "condition 1 fails: " + describe(closure.witnesses[i], v)};
        }

    // condition 2, bounded: every pointed model up to the world bound induces a
    // concept set equal to none, all, or that of a source assignment
    std::vector<std::bitset<256>> source_sets(1u << n);
    for (unsigned v = 0; v < (1u << n); ++v)
        for (std::size_t i = 0; i < cc; ++i)
            source_sets[v][i] = eval_index(closure.fns[i], v);
    std::bitset<256> all;
    for (std::size_t i = 0; i < cc; ++i) all[i] = true;

    // Leaf formulas dia^0 p .. dia^{n-1} p (or box). An image is a concept's
    // witness over these leaves; Boolean connectives evaluate pointwise, so
    // its value at the point is the concept's table applied to the
    // model-checked leaf values.
    std::vector<mformula_ptr> leaves;
    {
        mformula_ptr leaf = mformula::var("p");
        for (int d = 0; d < n; ++d) {
            if (d > 0)
                leaf = kind == pc_kind::modal_diamond ? mformula::dia(leaf)
                                                      : mformula::box(leaf);
            leaves.push_back(leaf);
        }
    }
    std::vector<std::bitset<256>> value_sets(1u << n);
    for (unsigned v = 0; v < (1u << n); ++v)
        for (std::size_t i = 0; i < cc; ++i)
            value_sets[v][i] = eval_index(closure.fns[i], v);
    for (int worlds = 1; worlds <= model_bound; ++worlds) {
        std::vector<std::string> wnames;
        for (int i = 0; i < worlds; ++i) wnames.push_back("w" + std::to_string(i));
        unsigned rel_count = 1u << (worlds * worlds);
        for (unsigned rel = 0; rel < rel_count; ++rel) {
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u < worlds; ++u)
                for (int v = 0; v < worlds; ++v)
                    if ((rel >> (u * worlds + v)) & 1) edges.push_back({u, v});
            for (unsigned lab = 0; lab < (1u << worlds); ++lab) {
                std::vector<std::set<std::string>> val(worlds);
                for (int u = 0; u < worlds; ++u)
                    if ((lab >> u) & 1) val[u].insert("p");
                auto m = kripke_model::make(wnames, edges, val);
                std::bitset<256> s;
                if (worlds <= 3) {
                    // small models: check the images directly
                    for (std::size_t i = 0; i < cc; ++i) s[i] = mc(m, "w0", images[i]);
                } else {
                    // larger models: model-check the leaves once, compose pointwise
                    unsigned leaf_vals = 0;
                    for (int d = 0; d < n; ++d)
                        if (mc(m, "w0", leaves[d])) leaf_vals |= 1u << d;
                    s = value_sets[leaf_vals];
                }
                bool ok = s.none() || s == all;
                for (unsigned v = 0; !ok && v < (1u << n); ++v) ok = (s == source_sets[v]);
                if (!ok)
                    return {false, true,
                            "condition 2 fails on a model with " + std::to_string(worlds) +
                                " worlds"};
            }
        }
    }
    return {true, true, ""};
}

} // namespace clonekit
