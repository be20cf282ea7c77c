#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clonekit/clones.hpp"
#include "clonekit/modal.hpp"

namespace clonekit {

// ---------------------------------------------------------------------------
// Problems and verdicts
// ---------------------------------------------------------------------------

enum class problem {
    sat,
    sat_fine,
    taut,
    count,
    implication,
    equivalence,
    isomorphism,
    evaluation_tree,
    minimization,
    expressibility,
    unique_char_finite,
    unique_char_poly,
    learn_mq,
    modal_consistency,
    tbox_sat,
    modal_teachability,
};

inline const char* problem_name(problem p) {
    switch (p) {
        case problem::sat: return "SAT";
        case problem::sat_fine: return "SAT_FINE";
        case problem::taut: return "TAUT";
        case problem::count: return "COUNT";
        case problem::implication: return "IMPLICATION";
        case problem::equivalence: return "EQUIVALENCE";
        case problem::isomorphism: return "ISOMORPHISM";
        case problem::evaluation_tree: return "EVALUATION_TREE";
        case problem::minimization: return "MINIMIZATION";
        case problem::expressibility: return "EXPRESSIBILITY";
        case problem::unique_char_finite: return "UNIQUE_CHAR_FINITE";
        case problem::unique_char_poly: return "UNIQUE_CHAR_POLY";
        case problem::learn_mq: return "LEARN_MQ";
        case problem::modal_consistency: return "MODAL_CONSISTENCY";
        case problem::tbox_sat: return "TBOX_SAT";
        case problem::modal_teachability: return "MODAL_TEACHABILITY";
    }
    return "?";
}

inline problem parse_problem(const std::string& s) {
    static const problem all[] = {
        problem::sat, problem::sat_fine, problem::taut, problem::count,
        problem::implication, problem::equivalence, problem::isomorphism,
        problem::evaluation_tree, problem::minimization, problem::expressibility,
        problem::unique_char_finite, problem::unique_char_poly, problem::learn_mq,
        problem::modal_consistency, problem::tbox_sat, problem::modal_teachability};
    for (problem p : all)
        if (s == problem_name(p)) return p;
    fail(errc::bad_input, "unknown problem '" + s + "'");
}

inline bool is_modal_problem(problem p) {
    return p == problem::modal_consistency || p == problem::tbox_sat ||
           p == problem::modal_teachability;
}

enum class cclass {
    trivial, constant_time, ac0, ac0_2, nlogtime, conlogtime, nc1, mod2,
    logspace, nl, parity_l, ptime, np, conp, theta2p, pspace, exptime, sharp_p,
    yes, no, open,
};

inline const char* cclass_name(cclass c) {
    switch (c) {
        case cclass::trivial: return "Trivial";
        case cclass::constant_time: return "ConstantTime";
        case cclass::ac0: return "AC0";
        case cclass::ac0_2: return "AC0[2]";
        case cclass::nlogtime: return "NLOGTIME";
        case cclass::conlogtime: return "coNLOGTIME";
        case cclass::nc1: return "NC1";
        case cclass::mod2: return "MOD2";
        case cclass::logspace: return "L";
        case cclass::nl: return "NL";
        case cclass::parity_l: return "ParityL";
        case cclass::ptime: return "P";
        case cclass::np: return "NP";
        case cclass::conp: return "coNP";
        case cclass::theta2p: return "Theta2P";
        case cclass::pspace: return "PSPACE";
        case cclass::exptime: return "EXPTIME";
        case cclass::sharp_p: return "#P";
        case cclass::yes: return "Yes";
        case cclass::no: return "No";
        case cclass::open: return "Open";
    }
    return "?";
}

enum class completeness { complete, hard_only, membership_only, exact };

inline const char* completeness_name(completeness c) {
    switch (c) {
        case completeness::complete: return "complete";
        case completeness::hard_only: return "hard_only";
        case completeness::membership_only: return "membership_only";
        case completeness::exact: return "exact";
    }
    return "?";
}

struct verdict {
    cclass cls;
    completeness comp;
    std::string citation;
    std::string note;   // optional
};

// ---------------------------------------------------------------------------
// Threshold tests
// ---------------------------------------------------------------------------

namespace detail {

// The classifier consults the basis only through clone tests, so any two
// bases generating the same clone receive identical verdicts.
struct threshold_tests {
    named_clone c;
    config cfg;

    explicit threshold_tests(const basis& O, const config& cfg_)
        : c(identify(O, cfg_)), cfg(cfg_) {}

    // does O sit below the clone generated by the named functions?
    bool below(std::initializer_list<std::string> names) const {
        basis b;
        for (const auto& n : names) b.add(named(n, cfg), n);
        return contains(identify(b, cfg), c, cfg);
    }
    // do the named functions all lie inside the clone of O?
    bool above(std::initializer_list<std::string> names) const {
        for (const auto& n : names)
            if (!clone_member(c, named(n, cfg))) return false;
        return true;
    }
    bool equiv(std::initializer_list<std::string> names) const {
        return below(names) && above(names);
    }
};

} // namespace detail

// ---------------------------------------------------------------------------
// Propositional classifications
// ---------------------------------------------------------------------------

inline verdict classify_prop(problem p, const basis& O, const config& cfg = default_config()) {
    expect(!is_modal_problem(p), errc::bad_input,
           std::string(problem_name(p)) + " needs modal operators; use classify_modal");
    detail::threshold_tests t(O, cfg);
    const char* reductions_caveat = " (under suitable reductions)";

    switch (p) {
        case problem::sat:
            if (t.above({"nimp"}))
                return {cclass::np, completeness::complete,
                        "Lewis's satisfiability dichotomy: NP-complete since {x&~y} <= O"};
            return {cclass::ptime, completeness::membership_only,
                    "Lewis's satisfiability dichotomy: polynomial time since {x&~y} !<= O"};

        case problem::sat_fine: {
            verdict v;
            if (t.below({"or", "eq"}) || t.below({"maj", "not"}) ||
                t.below({"not", "top", "bot"}))
                v = {cclass::logspace, completeness::membership_only,
                     "Reith's refined satisfiability classification: in L since O <= {|,<->} or O <= {maj,~} or O <= {~,T,F}"};
            else if (t.below({"and", "top", "bot"}) || t.below({"or", "top", "bot"}))
                v = {cclass::nl, completeness::complete,
                     "Reith's refined satisfiability classification: NL-complete since O <= {&,T,F} or O <= {|,T,F}"};
            else if (t.below({"xor", "top", "bot"}))
                v = {cclass::parity_l, completeness::complete,
                     "Reith's refined satisfiability classification: ParityL-complete since O <= {+,T,F}"};
            else if (t.below({"and", "or", "top", "bot"}))
                v = {cclass::ptime, completeness::complete,
                     "Reith's refined satisfiability classification: P-complete since O <= {&,|,T,F}"};
            else
                v = {cclass::np, completeness::complete,
                     "Reith's refined satisfiability classification: NP-complete (all remaining cases)"};
            v.note = "stated for tree representation; the source text introduces it as the "
                     "dag refinement, so the representation reading is recorded here";
            return v;
        }

        case problem::taut:
            if (t.above({"imp"}))
                return {cclass::conp, completeness::complete,
                        "tautology dichotomy (dual to satisfiability): coNP-complete since {x->y} <= O"};
            return {cclass::ptime, completeness::membership_only,
                    "tautology dichotomy (dual to satisfiability): polynomial time since {x->y} !<= O"};

        case problem::count:
            if (t.below({"and", "top", "bot"}))
                return {cclass::ptime, completeness::exact,
                        "model-counting dichotomy: polynomial time since O <= {&,T,F}"};
            if (t.below({"or", "top", "bot"}))
                return {cclass::ptime, completeness::exact,
                        "model-counting dichotomy: polynomial time since O <= {|,T,F}"};
            if (t.below({"xor", "bot"}))
                return {cclass::ptime, completeness::exact,
                        "model-counting dichotomy: polynomial time since O <= {+,F}"};
            if (t.below({"maj", "not"}))
                return {cclass::ptime, completeness::exact,
                        "model-counting dichotomy: polynomial time since O <= {maj,~}"};
            return {cclass::sharp_p, completeness::complete,
                    "model-counting dichotomy: #P-complete (all remaining cases)"};

        case problem::implication:
            if (t.above({"or_and3"}) || t.above({"and_or3"}) || t.above({"maj"}))
                return {cclass::conp, completeness::complete,
                        "implication classification (Beyersdorff et al.): coNP-complete since {(x&y)|z} <= O or {(x|y)&z} <= O or {maj} <= O"};
            if (t.above({"xor"}) && t.below({"eq", "bot"}))
                return {cclass::parity_l, completeness::complete,
                        "implication classification (Beyersdorff et al.): ParityL-complete since {+} <= O <= {<->,F}"};
            if (t.above({"not"}) && t.below({"not", "bot"}))
                return {cclass::ac0_2, completeness::membership_only,
                        "implication classification (Beyersdorff et al.): in AC0[2] and MOD2-hard" +
                            std::string(reductions_caveat) + " since {~} <= O <= {~,F}",
                        "MOD2-hard, hence outside AC0"};
            return {cclass::ac0, completeness::membership_only,
                    "implication classification (Beyersdorff et al.): in AC0 (all remaining cases)"};

        case problem::equivalence:
            if (t.above({"or_and3"}) || t.above({"and_or3"}) || t.above({"maj"}))
                return {cclass::conp, completeness::complete,
                        "equivalence classification (Beyersdorff et al.): coNP-complete since {(x&y)|z} <= O or {(x|y)&z} <= O or {maj} <= O"};
            if (t.above({"not"}) && t.below({"not", "bot"}))
                return {cclass::ac0_2, completeness::complete,
                        "equivalence classification (Beyersdorff et al.): AC0[2]-complete" +
                            std::string(reductions_caveat) + " since {~} <= O <= {~,F}"};
            return {cclass::ac0, completeness::membership_only,
                    "equivalence classification (Beyersdorff et al.): in AC0 (all remaining cases)"};

        case problem::isomorphism:
            if (t.below({"or", "top", "bot"}) || t.below({"and", "top", "bot"}) ||
                t.below({"xor", "top"}))
                return {cclass::logspace, completeness::membership_only,
                        "isomorphism classification: in L since O <= {|,T,F} or O <= {&,T,F} or O <= {+,T}"};
            return {cclass::conp, completeness::hard_only,
                    "isomorphism classification: coNP-hard (all remaining cases)"};

        case problem::evaluation_tree: {
            verdict v;
            if (t.equiv({"top", "bot"}))
                v = {cclass::constant_time, completeness::exact,
                     "tree-evaluation classification (Schnoor): constant time since O == {T,F}"};
            else if (t.equiv({"or", "top", "bot"}))
                v = {cclass::nlogtime, completeness::complete,
                     "tree-evaluation classification (Schnoor): NLOGTIME-complete" +
                         std::string(reductions_caveat) + " since O == {|,T,F}"};
            else if (t.equiv({"and", "top", "bot"}))
                v = {cclass::conlogtime, completeness::complete,
                     "tree-evaluation classification (Schnoor): coNLOGTIME-complete" +
                         std::string(reductions_caveat) + " since O == {&,T,F}"};
            else if (t.above({"not", "top", "bot"}) && t.below({"xor", "top", "bot"}))
                v = {cclass::mod2, completeness::exact,
                     "tree-evaluation classification (Schnoor): equivalent to MOD2" +
                         std::string(reductions_caveat) + " since {~,T,F} <= O <= {+,T,F}"};
            else
                v = {cclass::nc1, completeness::complete,
                     "tree-evaluation classification (Schnoor): NC1-complete" +
                         std::string(reductions_caveat) + " (all remaining cases)"};
            if (!t.above({"top", "bot"}))
                v.note = "classification stated for bases containing T and F";
            return v;
        }

        case problem::minimization:
            if (t.below({"or", "top", "bot"}) || t.below({"and", "top", "bot"}) ||
                t.below({"xor", "top", "bot"}))
                return {cclass::ptime, completeness::membership_only,
                        "minimization classification (Hemaspaandra-Schnoor): polynomial time since O <= {|,T,F} or O <= {&,T,F} or O <= {+,T,F}"};
            return {cclass::conp, completeness::hard_only,
                    "minimization classification (Hemaspaandra-Schnoor): at least coNP-hard (all remaining cases)"};

        case problem::expressibility:
            if (t.above({"and", "xor"}) || t.above({"or", "eq"}))
                return {cclass::ptime, completeness::membership_only,
                        "expressibility classification (Boehler-Schnoor): polynomial time since {&,+} <= O or {|,<->} <= O"};
            return {cclass::np, completeness::complete,
                    "expressibility classification (Boehler-Schnoor): NP-complete (all remaining cases)"};

        case problem::unique_char_finite:
            if (t.below({"and", "or", "top", "bot"}) || t.below({"not", "bot"}))
                return {cclass::yes, completeness::exact,
                        "finite unique characterizations exist iff O <= {&,|,T,F} or O <= {~,F}"};
            return {cclass::no, completeness::exact,
                    "finite unique characterizations exist iff O <= {&,|,T,F} or O <= {~,F}"};

        case problem::unique_char_poly:
            if (t.below({"and", "top", "bot"}) || t.below({"or", "top", "bot"}) ||
                t.below({"not", "bot"}))
                return {cclass::yes, completeness::exact,
                        "polynomial-size unique characterizations exist iff O <= {&,T,F} or O <= {|,T,F} or O <= {~,F}"};
            return {cclass::no, completeness::exact,
                    "polynomial-size unique characterizations exist iff O <= {&,T,F} or O <= {|,T,F} or O <= {~,F}"};

        case problem::learn_mq:
            if (t.below({"and", "top", "bot"}) || t.below({"or", "top", "bot"}) ||
                t.below({"xor", "top", "bot"}))
                return {cclass::yes, completeness::exact,
                        "exact learning with membership queries (Dalmau): n+1 queries suffice iff O <= {&,T,F} or O <= {|,T,F} or O <= {+,T,F}"};
            return {cclass::no, completeness::exact,
                    "exact learning with membership queries (Dalmau): no polynomial bound otherwise"};

        default:
            fail(errc::bad_input, "unhandled propositional problem");
    }
}

// ---------------------------------------------------------------------------
// Modal classifications
// ---------------------------------------------------------------------------

inline verdict classify_modal(problem p, const modal_ops& m, const basis& O,
                              const std::string& logic,
                              const config& cfg = default_config()) {
    expect(is_modal_problem(p), errc::bad_input,
           std::string(problem_name(p)) + " is propositional; use classify_prop");
    detail::threshold_tests t(O, cfg);

    switch (p) {
        case problem::modal_consistency: {
            expect(!m.empty(), errc::bad_modal_set,
                   "consistency classification assumes at least one modal operator");
            bool known = logic == "K" || logic == "KD" || logic == "T" || logic == "K4" ||
                         logic == "S4" || logic == "S5";
            expect(known, errc::unsupported_logic,
                   "consistency classification covers K, KD, T, K4, S4, S5");
            if (logic != "K") {
                if (t.above({"xor"}) && t.below({"xor", "bot"}))
                    return {cclass::open, completeness::exact,
                            "consistency for " + logic +
                                ": the affine cases {+} <= O <= {+,F} are open",
                            "open affine gap"};
                return {cclass::open, completeness::exact,
                        "consistency for " + logic +
                            ": classified in the literature but not tabulated here",
                        "only the K table is carried"};
            }
            if (t.above({"nimp"}) ||
                (m.dia && m.box && t.above({"and_or3", "bot"})))
                return {cclass::pspace, completeness::complete,
                        "K-consistency classification: PSPACE-complete since {x&~y} <= O or {x&(y|z),F,dia,box} <= Phi"};
            if (m.dia && m.box && t.above({"and"}) && t.below({"and", "top", "bot"}))
                return {cclass::conp, completeness::complete,
                        "K-consistency classification: coNP-complete since {&,dia,box} <= Phi <= {&,T,F,dia,box}"};
            return {cclass::ptime, completeness::membership_only,
                    "K-consistency classification: polynomial time (all remaining cases)"};
        }

        case problem::tbox_sat: {
            expect(logic == "K_omega" || logic == "Kw", errc::unsupported_logic,
                   "TBox satisfiability is classified for the multi-modal logic K_omega");
            const char* src = "TBox satisfiability classification over K_omega";
            if (!m.dia && !m.box) {
                if (t.above({"and", "or", "top", "bot"}) || t.above({"xnor3"}))
                    return {cclass::np, completeness::complete,
                            std::string(src) + ": NP-complete since {&,|,T,F} <= O or {x+y+z+T} <= O"};
                if (t.equiv({"and", "top", "bot"}) || t.equiv({"or", "top", "bot"}))
                    return {cclass::ptime, completeness::complete,
                            std::string(src) + ": P-complete since O == {&,T,F} or O == {|,T,F}"};
                if ((t.above({"not"}) && t.below({"not", "top", "bot"})) ||
                    t.equiv({"top", "bot"}))
                    return {cclass::nl, completeness::complete,
                            std::string(src) + ": NL-complete since {~} <= O <= {~,T,F} or O == {T,F}"};
                return {cclass::trivial, completeness::exact,
                        std::string(src) + ": trivial (all remaining cases)"};
            }
            if (m.dia && !m.box) {
                if (t.above({"or", "top", "bot"}) || t.above({"not"}))
                    return {cclass::exptime, completeness::complete,
                            std::string(src) + ": EXPTIME-complete since {|,T,F} <= O or {~} <= O"};
                if (t.above({"top", "bot"}) && t.below({"and", "top", "bot"}))
                    return {cclass::ptime, completeness::complete,
                            std::string(src) + ": P-complete since {T,F} <= O <= {&,T,F}"};
                return {cclass::trivial, completeness::exact,
                        std::string(src) + ": trivial (all remaining cases)"};
            }
            if (!m.dia && m.box) {
                if (t.above({"and", "top", "bot"}) || t.above({"not"}))
                    return {cclass::exptime, completeness::complete,
                            std::string(src) + ": EXPTIME-complete since {&,T,F} <= O or {~} <= O"};
                if (t.above({"top", "bot"}) && t.below({"or", "top", "bot"}))
                    return {cclass::ptime, completeness::complete,
                            std::string(src) + ": P-complete since {T,F} <= O <= {|,T,F}"};
                return {cclass::trivial, completeness::exact,
                        std::string(src) + ": trivial (all remaining cases)"};
            }
            if (t.above({"top", "bot"}) || t.above({"not"}))
                return {cclass::exptime, completeness::complete,
                        std::string(src) + ": EXPTIME-complete since {T,F} <= O or {~} <= O"};
            return {cclass::trivial, completeness::exact,
                    std::string(src) + ": trivial (all remaining cases)"};
        }

        case problem::modal_teachability: {
            expect(logic == "K", errc::unsupported_logic,
                   "the teachability dichotomy is stated for K");
            expect(!m.empty(), errc::bad_modal_set,
                   "the teachability dichotomy assumes at least one modal operator");
            const char* src = "teachability dichotomy for simple modal fragments over K";
            bool yes = (!m.box && t.below({"and", "or", "top", "bot"})) ||
                       (!m.dia && t.below({"and", "or", "top", "bot"})) ||
                       t.below({"and", "or"}) || t.below({"not", "bot"}) ||
                       t.below({"and", "top"}) || t.below({"or", "bot"});
            if (yes)
                return {cclass::yes, completeness::exact,
                        std::string(src) +
                            ": finite characterizations and effective exact learning exist"};
            return {cclass::no, completeness::exact,
                    std::string(src) + ": no finite characterizations"};
        }

        default:
            fail(errc::bad_input, "unhandled modal problem");
    }
}

} // namespace clonekit
