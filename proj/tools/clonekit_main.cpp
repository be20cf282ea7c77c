// clonekit: a command-line toolkit for basis-restricted propositional and
// modal logic built on Post's lattice of Boolean clones.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "clonekit/serialize.hpp"

namespace ck = clonekit;
using nlohmann::json;

namespace {

struct cli_state {
    ck::config cfg;        // flag values land here during parsing
    std::string config_file;
    bool pretty = false;
    std::vector<std::pair<CLI::Option*, std::function<void(const ck::config&, ck::config&)>>>
        flag_restores;

    // Flags override the config file: apply the file first, then re-apply
    // every flag the user actually passed.
    void load() {
        if (!config_file.empty()) {
            ck::config flags = cfg;
            std::ifstream in(config_file);
            ck::expect(in.good(), ck::errc::bad_input,
                       "cannot open config file '" + config_file + "'");
            json j = json::parse(in);
            if (j.contains("arity_cap")) cfg.arity_cap = j["arity_cap"].get<int>();
            if (j.contains("degree_cap")) cfg.degree_cap = j["degree_cap"].get<int>();
            if (j.contains("closure_budget"))
                cfg.closure_budget = j["closure_budget"].get<std::size_t>();
            if (j.contains("brute_var_cap")) cfg.brute_var_cap = j["brute_var_cap"].get<int>();
            if (j.contains("modal_depth_bound"))
                cfg.modal_depth_bound = j["modal_depth_bound"].get<int>();
            if (j.contains("modal_model_bound"))
                cfg.modal_model_bound = j["modal_model_bound"].get<int>();
            for (auto& [opt, restore] : flag_restores)
                if (opt->count() > 0) restore(flags, cfg);
        }
        cfg.validate();
    }

    void emit(const json& j) const {
        std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
    }
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        while (!item.empty() && item.front() == ' ') item.erase(item.begin());
        while (!item.empty() && item.back() == ' ') item.pop_back();
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

ck::modal_ops parse_ops(const std::string& s) {
    ck::modal_ops ops;
    for (const auto& item : split_list(s)) {
        if (item == "diamond" || item == "dia" || item == "<>") ops.dia = true;
        else if (item == "box" || item == "[]") ops.box = true;
        else if (item == "none") continue;
        else ck::fail(ck::errc::bad_modal_set, "unknown modal operator '" + item + "'");
    }
    return ops;
}

json parse_json_arg(const std::string& text_or_path) {
    if (!text_or_path.empty() && (text_or_path.front() == '{' || text_or_path.front() == '['))
        return json::parse(text_or_path);
    std::ifstream in(text_or_path);
    ck::expect(in.good(), ck::errc::bad_input, "cannot open '" + text_or_path + "'");
    return json::parse(in);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"clonekit: clone identification, dichotomy classification and "
                 "teaching/learning tools for basis-restricted logics"};
    app.require_subcommand(1);

    auto state = std::make_shared<cli_state>();
    app.add_option("--config", state->config_file, "JSON config file");
    state->flag_restores = {
        {app.add_option("--arity-cap", state->cfg.arity_cap, "maximum function arity (<= 6)"),
         [](const ck::config& f, ck::config& c) { c.arity_cap = f.arity_cap; }},
        {app.add_option("--degree-cap", state->cfg.degree_cap, "maximum separating degree"),
         [](const ck::config& f, ck::config& c) { c.degree_cap = f.degree_cap; }},
        {app.add_option("--closure-budget", state->cfg.closure_budget,
                        "abort closures beyond this many functions"),
         [](const ck::config& f, ck::config& c) { c.closure_budget = f.closure_budget; }},
        {app.add_option("--brute-var-cap", state->cfg.brute_var_cap,
                        "refuse exhaustive search beyond this many variables"),
         [](const ck::config& f, ck::config& c) { c.brute_var_cap = f.brute_var_cap; }},
        {app.add_option("--modal-depth-bound", state->cfg.modal_depth_bound,
                        "default modal enumeration depth"),
         [](const ck::config& f, ck::config& c) { c.modal_depth_bound = f.modal_depth_bound; }},
        {app.add_option("--modal-model-bound", state->cfg.modal_model_bound,
                        "default model-size bound"),
         [](const ck::config& f, ck::config& c) { c.modal_model_bound = f.modal_model_bound; }},
    };
    app.add_flag("--pretty", state->pretty, "indent JSON output");

    auto rc = std::make_shared<int>(0);
    auto run = [rc, state](auto body) {
        return [rc, state, body]() {
            try {
                state->load();
                body(*state);
            } catch (const ck::error& e) {
                json j = {{"error", {{"code", ck::errc_name(e.code())},
                                     {"message", e.what()}}}};
                std::cout << (state->pretty ? j.dump(2) : j.dump()) << "\n";
                *rc = 1;
            }
        };
    };

    // ---- clone -------------------------------------------------------------
    auto* clone_cmd = app.add_subcommand("clone", "clone identification and the lattice");
    clone_cmd->require_subcommand(1);

    {
        auto* c = clone_cmd->add_subcommand("id", "identify the clone generated by a basis");
        auto b = std::make_shared<std::string>();
        c->add_option("--basis", *b, "comma-separated basis")->required();
        c->callback(run([b](cli_state& st) {
            auto clone = ck::identify(ck::parse_basis(*b, st.cfg), st.cfg);
            st.emit({{"clone", ck::to_json(clone)}});
        }));
    }
    {
        auto* c = clone_cmd->add_subcommand("member", "membership of a function in a clone");
        auto fn = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        c->add_option("--fn", *fn, "function (catalog name or arity:hex)")->required();
        c->add_option("--basis", *b, "comma-separated basis")->required();
        c->callback(run([fn, b](cli_state& st) {
            ck::basis probe = ck::parse_basis(*fn, st.cfg);
            ck::expect(probe.size() == 1, ck::errc::bad_input, "--fn takes one function");
            bool m = ck::member(probe.entries[0].fn, ck::parse_basis(*b, st.cfg), st.cfg);
            st.emit({{"member", m}});
        }));
    }
    {
        auto* c = clone_cmd->add_subcommand("leq", "clone containment between two bases");
        auto lhs = std::make_shared<std::string>();
        auto rhs = std::make_shared<std::string>();
        c->add_option("--lhs", *lhs, "basis O")->required();
        c->add_option("--rhs", *rhs, "basis O'")->required();
        c->callback(run([lhs, rhs](cli_state& st) {
            bool v = ck::leq(ck::parse_basis(*lhs, st.cfg), ck::parse_basis(*rhs, st.cfg),
                             st.cfg);
            st.emit({{"leq", v}});
        }));
    }
    {
        auto* c = clone_cmd->add_subcommand(
            "lattice-dot", "emit the named clone lattice as a DOT digraph");
        c->callback(run([](cli_state& st) { std::cout << ck::lattice_dot(st.cfg); }));
    }

    // ---- classify ----------------------------------------------------------
    {
        auto* c = app.add_subcommand("classify", "complexity verdict for a reasoning problem");
        auto prob = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto ops = std::make_shared<std::string>();
        auto logic = std::make_shared<std::string>("K");
        c->add_option("--problem", *prob, "problem tag, e.g. SAT or MODAL_CONSISTENCY")
            ->required();
        c->add_option("--basis", *b, "comma-separated basis");
        c->add_option("--modal", *ops, "modal operators: diamond,box");
        c->add_option("--logic", *logic, "modal logic name");
        c->callback(run([prob, b, ops, logic](cli_state& st) {
            ck::problem p = ck::parse_problem(*prob);
            ck::basis O = ck::parse_basis(*b, st.cfg);
            ck::verdict v = ck::is_modal_problem(p)
                                ? ck::classify_modal(p, parse_ops(*ops), O, *logic, st.cfg)
                                : ck::classify_prop(p, O, st.cfg);
            st.emit(ck::to_json(v));
        }));
    }

    // ---- sat / count / express / measure ------------------------------------
    {
        auto* c = app.add_subcommand("sat", "satisfiability with per-clone dispatch");
        auto fml = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        c->add_option("--formula", *fml, "formula text")->required();
        c->add_option("--basis", *b, "declared basis")->required();
        c->callback(run([fml, b](cli_state& st) {
            ck::basis B = ck::parse_basis(*b, st.cfg);
            auto f = ck::parse(*fml, B, st.cfg);
            st.emit(ck::to_json(ck::solve_sat(f, B, st.cfg)));
        }));
    }
    {
        auto* c = app.add_subcommand("count", "count satisfying assignments");
        auto fml = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto props = std::make_shared<std::string>();
        c->add_option("--formula", *fml, "formula text")->required();
        c->add_option("--basis", *b, "declared basis")->required();
        c->add_option("--props", *props, "declared variables, comma-separated")->required();
        c->callback(run([fml, b, props](cli_state& st) {
            ck::basis B = ck::parse_basis(*b, st.cfg);
            auto f = ck::parse(*fml, B, st.cfg);
            st.emit({{"count", ck::count_models(f, B, split_list(*props), st.cfg)}});
        }));
    }
    {
        auto* c = app.add_subcommand("express", "is the formula expressible over a basis");
        auto fml = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        c->add_option("--formula", *fml, "formula text (any catalog connective)")->required();
        c->add_option("--basis", *b, "target basis O")->required();
        c->callback(run([fml, b](cli_state& st) {
            auto f = ck::parse_any(*fml, st.cfg);
            st.emit({{"expressible",
                      ck::expressible(f, ck::parse_basis(*b, st.cfg), st.cfg)}});
        }));
    }
    {
        auto* c = app.add_subcommand("measure", "tree and dag size of a formula");
        auto fml = std::make_shared<std::string>();
        auto modal = std::make_shared<bool>(false);
        c->add_option("--formula", *fml, "formula text")->required();
        c->add_flag("--modal", *modal, "parse as a modal formula");
        c->callback(run([fml, modal](cli_state& st) {
            ck::size_measure m = *modal ? ck::measure_modal(ck::parse_modal(*fml))
                                        : ck::measure(ck::parse_any(*fml, st.cfg));
            st.emit({{"tree", m.tree}, {"dag", m.dag}});
        }));
    }

    // ---- teach --------------------------------------------------------------
    auto* teach_cmd = app.add_subcommand("teach", "teaching sets and their verification");
    teach_cmd->require_subcommand(1);
    {
        auto* c = teach_cmd->add_subcommand("make", "construct a teaching set");
        auto fml = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto props = std::make_shared<std::string>();
        auto modal = std::make_shared<bool>(false);
        c->add_option("--formula", *fml)->required();
        c->add_option("--basis", *b, "fragment basis (propositional targets)");
        c->add_option("--props", *props)->required();
        c->add_flag("--modal", *modal, "modal prefix-fragment target");
        c->callback(run([fml, b, props, modal](cli_state& st) {
            auto ps = split_list(*props);
            if (*modal) {
                auto f = ck::parse_modal(*fml);
                st.emit({{"examples", ck::to_json(ck::teach_modal(f, ps, st.cfg))}});
            } else {
                ck::basis B = ck::parse_basis(*b, st.cfg);
                auto f = ck::parse(*fml, B, st.cfg);
                st.emit({{"examples", ck::to_json(ck::teach_prop(f, B, ps, st.cfg))}});
            }
        }));
    }
    {
        auto* c = teach_cmd->add_subcommand("verify", "verify unique characterization");
        auto fml = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto props = std::make_shared<std::string>();
        auto examples = std::make_shared<std::string>();
        auto modal = std::make_shared<bool>(false);
        auto ops = std::make_shared<std::string>("diamond,box");
        auto bound = std::make_shared<int>(0);
        c->add_option("--formula", *fml)->required();
        c->add_option("--basis", *b, "fragment basis");
        c->add_option("--props", *props)->required();
        c->add_option("--examples", *examples, "JSON array or file")->required();
        c->add_flag("--modal", *modal);
        c->add_option("--modal-ops", *ops, "fragment modal operators");
        c->add_option("--bound", *bound, "modal enumeration depth bound");
        c->callback(run([fml, b, props, examples, modal, ops, bound](cli_state& st) {
            auto ps = split_list(*props);
            auto ts = ck::teaching_set_from_json(parse_json_arg(*examples));
            if (*modal) {
                auto f = ck::parse_modal(*fml);
                ck::modal_fragment frag{parse_ops(*ops),
                                        ck::parse_basis(b->empty() ? "not,top" : *b, st.cfg)};
                int bd = *bound > 0 ? *bound : st.cfg.modal_depth_bound + 1;
                auto r = ck::verify_unique_modal(f, ts, frag, ps, bd, st.cfg);
                json j = {{"result",
                           r.st == ck::modal_unique_result::status::unique_up_to_bound
                               ? "UniqueUpToBound"
                               : r.st == ck::modal_unique_result::status::ambiguous
                                     ? "Ambiguous"
                                     : "NotFitting"}};
                if (!r.witness.empty()) j["witness"] = r.witness;
                if (r.distinguishing) j["distinguishing"] = ck::to_json(*r.distinguishing);
                st.emit(j);
            } else {
                ck::basis B = ck::parse_basis(*b, st.cfg);
                auto f = ck::parse(*fml, B, st.cfg);
                auto r = ck::verify_unique(f, ts, B, ps, st.cfg);
                json j = {{"result", r.st == ck::unique_result::status::unique ? "Unique"
                                     : r.st == ck::unique_result::status::ambiguous
                                         ? "Ambiguous"
                                         : "NotFitting"}};
                if (r.witnesses)
                    j["witnesses"] = {ck::print_fn_literal(r.witnesses->first),
                                      ck::print_fn_literal(r.witnesses->second)};
                st.emit(j);
            }
        }));
    }

    // ---- learn --------------------------------------------------------------
    {
        auto* c = app.add_subcommand("learn", "exact learning with membership queries");
        auto b = std::make_shared<std::string>();
        auto props = std::make_shared<std::string>();
        auto oracle = std::make_shared<std::string>();
        c->add_option("--basis", *b, "fragment basis")->required();
        c->add_option("--props", *props)->required();
        c->add_option("--oracle-file", *oracle,
                      "JSON {\"props\":[...],\"fn\":\"arity:hex\"} truth table")
            ->required();
        c->callback(run([b, props, oracle](cli_state& st) {
            auto ps = split_list(*props);
            json j = parse_json_arg(*oracle);
            ck::expect(j.contains("fn"), ck::errc::bad_input, "oracle file needs \"fn\"");
            auto table = ck::parse_fn_literal(j["fn"].get<std::string>(), st.cfg);
            auto oracle_props = j.contains("props")
                                    ? j["props"].get<std::vector<std::string>>()
                                    : ps;
            ck::expect(oracle_props.size() == static_cast<std::size_t>(table.arity),
                       ck::errc::bad_input, "oracle props do not match the table arity");
            auto fn = [&](const ck::assignment& a) {
                unsigned idx = 0;
                for (std::size_t k = 0; k < oracle_props.size(); ++k) {
                    auto it = a.find(oracle_props[k]);
                    if (it != a.end() && it->second) idx |= 1u << k;
                }
                return ck::eval_index(table, idx);
            };
            auto r = ck::learn_mq(ck::parse_basis(*b, st.cfg), ps, fn, st.cfg);
            st.emit({{"formula", ck::print(r.hypothesis)}, {"queries", r.queries}});
        }));
    }

    // ---- reduce -------------------------------------------------------------
    auto* reduce_cmd = app.add_subcommand("reduce", "concept-class reductions");
    reduce_cmd->require_subcommand(1);
    {
        auto* c = reduce_cmd->add_subcommand("make", "apply a reduction to a formula");
        auto kind = std::make_shared<std::string>();
        auto fml = std::make_shared<std::string>();
        c->add_option("--kind", *kind, "oxor | aimp | modal_diamond | modal_box")->required();
        c->add_option("--formula", *fml)->required();
        c->callback(run([kind, fml](cli_state& st) {
            auto k = ck::parse_pc_kind(*kind);
            auto f = ck::parse_any(*fml, st.cfg);
            auto image = ck::pc_reduce(k, f, st.cfg);
            json j = {{"example_map", image.example_map}};
            j["image"] = image.prop ? ck::print(image.prop) : ck::print_modal(image.modal);
            st.emit(j);
        }));
    }
    {
        auto* c = reduce_cmd->add_subcommand("verify", "check the reduction conditions");
        auto kind = std::make_shared<std::string>();
        auto arity = std::make_shared<int>(2);
        auto bound = std::make_shared<int>(4);
        auto mutate = std::make_shared<bool>(false);
        c->add_option("--kind", *kind)->required();
        c->add_option("--arity", *arity, "source variable count (<= 3)");
        c->add_option("--model-bound", *bound, "world bound for the modal kinds");
        c->add_flag("--mutate", *mutate, "corrupt the example map first");
        c->callback(run([kind, arity, bound, mutate](cli_state& st) {
            auto r = ck::verify_pc(ck::parse_pc_kind(*kind), *arity, *bound, *mutate, st.cfg);
            json j = {{"pass", r.pass}, {"at_bound", r.at_bound}};
            if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
            st.emit(j);
        }));
    }

    // ---- modal --------------------------------------------------------------
    auto* modal_cmd = app.add_subcommand("modal", "modal fragment machinery");
    modal_cmd->require_subcommand(1);
    {
        auto* c = modal_cmd->add_subcommand("mc", "model checking");
        auto fml = std::make_shared<std::string>();
        auto model = std::make_shared<std::string>();
        auto world = std::make_shared<std::string>();
        c->add_option("--formula", *fml)->required();
        c->add_option("--model", *model, "pointed model as JSON or a file")->required();
        c->add_option("--world", *world, "override the model's point");
        c->callback(run([fml, model, world](cli_state& st) {
            auto pm = ck::pointed_model_from_json(parse_json_arg(*model));
            if (!world->empty()) pm.world = *world;
            st.emit({{"value", ck::mc(pm, ck::parse_modal(*fml))}});
        }));
    }
    {
        auto* c = modal_cmd->add_subcommand("clos", "Boolean functions the fragment defines");
        auto logic = std::make_shared<std::string>("K");
        auto ops = std::make_shared<std::string>();
        auto clone = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        c->add_option("--logic", *logic)->required();
        c->add_option("--modal", *ops, "modal operators")->required();
        c->add_option("--clone", *clone, "named clone, e.g. V2 or S00^3");
        c->add_option("--basis", *b, "or a basis to identify first");
        c->callback(run([logic, ops, clone, b](cli_state& st) {
            ck::named_clone c0 = clone->empty()
                                     ? ck::identify(ck::parse_basis(*b, st.cfg), st.cfg)
                                     : ck::parse_clone_name(*clone);
            auto r = ck::clos(*logic, parse_ops(*ops), c0, st.cfg);
            json j;
            if (r.exact) j["exact"] = ck::to_json(r.lower);
            else j["interval"] = {{"lower", ck::to_json(r.lower)},
                                  {"upper", ck::to_json(r.upper)}};
            if (!r.notes.empty()) j["notes"] = r.notes;
            st.emit(j);
        }));
    }
    {
        auto* c = modal_cmd->add_subcommand("leq", "containment of simple fragments");
        auto logic = std::make_shared<std::string>("K");
        auto ops = std::make_shared<std::string>();
        auto lhs = std::make_shared<std::string>();
        auto rhs = std::make_shared<std::string>();
        c->add_option("--logic", *logic)->required();
        c->add_option("--modal", *ops, "shared modal operators")->required();
        c->add_option("--lhs", *lhs, "basis of the left fragment")->required();
        c->add_option("--rhs", *rhs, "basis of the right fragment")->required();
        c->callback(run([logic, ops, lhs, rhs](cli_state& st) {
            auto m = parse_ops(*ops);
            ck::simple_fragment f1{m, ck::parse_basis(*lhs, st.cfg)};
            ck::simple_fragment f2{m, ck::parse_basis(*rhs, st.cfg)};
            st.emit({{"leq", ck::simple_leq(f1, f2, *logic, st.cfg)}});
        }));
    }
    {
        auto* c = modal_cmd->add_subcommand("complete", "expressive completeness");
        auto logic = std::make_shared<std::string>("K");
        auto ops = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        c->add_option("--logic", *logic)->required();
        c->add_option("--modal", *ops, "modal operators")->required();
        c->add_option("--basis", *b, "propositional part of the fragment")->required();
        c->callback(run([logic, ops, b](cli_state& st) {
            ck::simple_fragment f{parse_ops(*ops), ck::parse_basis(*b, st.cfg)};
            st.emit({{"complete",
                      ck::tristate_name(ck::simple_complete(f, *logic, st.cfg))}});
        }));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return *rc;
}
