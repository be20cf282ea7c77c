#include <catch2/catch_amalgamated.hpp>

#include "support/subprocess.hpp"

using namespace clonekit::testing;
using nlohmann::json;

namespace {

json out_json(const std::string& args, int expected_exit = 0) {
    auto r = run_cli(args);
    REQUIRE(r.exit_code == expected_exit);
    return json::parse(r.out);
}

void check_schema(const json& j, const std::string& schema) {
    std::string why;
    INFO(why);
    CHECK(matches_schema(j, load_schema(schema), &why));
}

} // namespace

TEST_CASE("clone id") {
    auto j = out_json("clone id --basis nimp");
    check_schema(j, "clone_id");
    CHECK(j["clone"]["family"] == "S1");

    CHECK(out_json("clone id --basis \"\"")["clone"]["family"] == "I2");
    CHECK(out_json("clone id --basis \"and,not\"")["clone"]["family"] == "BF");
    auto param = out_json("clone id --basis \"threshold(4,2)\"");
    CHECK(param["clone"]["family"] == "S00n");
    CHECK(param["clone"]["degree"] == 3);
    CHECK(out_json("clone id --basis 2:8")["clone"]["family"] == "E2");
}

TEST_CASE("clone member and leq") {
    auto j = out_json("clone member --fn and --basis nimp");
    check_schema(j, "member");
    CHECK(j["member"] == true);
    CHECK(out_json("clone member --fn not --basis \"and,or,top,bot\"")["member"] == false);

    auto l = out_json("clone leq --lhs maj --rhs \"and,or\"");
    check_schema(l, "leq");
    CHECK(l["leq"] == true);
    CHECK(out_json("clone leq --lhs xor --rhs \"and,or,top,bot\"")["leq"] == false);
}

TEST_CASE("clone lattice-dot") {
    auto a = run_cli("--degree-cap 2 clone lattice-dot");
    auto b = run_cli("--degree-cap 2 clone lattice-dot");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);   // byte-identical across runs
    CHECK(a.out.find("digraph post_lattice") != std::string::npos);
    CHECK(a.out.find("\"BF\" -> \"R0\"") != std::string::npos);
    // 46 node lines at degree cap 2
    std::size_t count = 0;
    std::istringstream ss(a.out);
    std::string line;
    while (std::getline(ss, line))
        if (line.size() > 2 && line.compare(line.size() - 2, 2, "\";") == 0 &&
            line.find("->") == std::string::npos)
            ++count;
    CHECK(count == 46);
}

TEST_CASE("classify") {
    auto j = out_json("classify --problem SAT --basis \"and,or,top,bot\"");
    check_schema(j, "classify");
    CHECK(j["class"] == "P");

    auto np = out_json("classify --problem SAT --basis nimp");
    CHECK(np["class"] == "NP");
    CHECK(np["completeness"] == "complete");

    auto modal = out_json(
        "classify --problem MODAL_CONSISTENCY --basis and --modal diamond,box --logic K");
    check_schema(modal, "classify");
    CHECK(modal["class"] == "coNP");

    auto tbox = out_json(
        "classify --problem TBOX_SAT --basis \"or,top,bot\" --modal diamond --logic K_omega");
    CHECK(tbox["class"] == "EXPTIME");
}

TEST_CASE("sat, count, express, measure") {
    auto j = out_json("sat --formula \"and(p,q)\" --basis and");
    check_schema(j, "sat");
    CHECK(j["status"] == "satisfiable");
    CHECK(j["witness"]["p"] == 1);

    auto c = out_json("count --formula \"and(p,q)\" --basis and --props p,q,r");
    check_schema(c, "count");
    CHECK(c["count"] == 2);

    auto e = out_json("express --formula \"!( !p & !q )\" --basis or");
    check_schema(e, "express");
    CHECK(e["expressible"] == true);

    auto m = out_json("measure --formula \"and(p,and(q,q))\"");
    check_schema(m, "measure");
    CHECK(m["tree"] == 5);
    CHECK(m["dag"] == 4);

    auto mm = out_json("measure --modal --formula \"dia(and(p,q))\"");
    CHECK(mm["tree"] == 4);
}

TEST_CASE("teach make and verify") {
    auto j = out_json("teach make --formula \"and(p,q)\" --basis and --props p,q");
    check_schema(j, "teach_make");
    REQUIRE(j["examples"].size() == 3);

    std::string examples = j["examples"].dump();
    auto v = out_json("teach verify --formula \"and(p,q)\" --basis and --props p,q "
                      "--examples '" + examples + "'");
    check_schema(v, "teach_verify");
    CHECK(v["result"] == "Unique");

    auto bad = out_json(
        "teach verify --formula \"and(p,q)\" --basis \"and,or\" --props p,q "
        "--examples '[{\"assignment\":{\"p\":1,\"q\":1},\"label\":1}]'");
    CHECK(bad["result"] == "Ambiguous");

    auto modal = out_json("teach make --modal --formula \"dia(p)\" --props p");
    check_schema(modal, "teach_make");
    auto mv = out_json("teach verify --modal --formula \"dia(p)\" --props p --bound 3 "
                       "--examples '" + modal["examples"].dump() + "'");
    CHECK(mv["result"] == "UniqueUpToBound");
}

TEST_CASE("learn") {
    std::string oracle = "/tmp/clonekit_oracle_test.json";
    {
        std::ofstream out(oracle);
        out << R"({"props":["p","q"],"fn":"2:8"})";
    }
    auto j = out_json("learn --basis \"and,top,bot\" --props p,q --oracle-file " + oracle);
    check_schema(j, "learn");
    CHECK(j["queries"] == 3);
    CHECK(j["formula"] == "and(p,q)");
}

TEST_CASE("reduce") {
    auto j = out_json("reduce make --kind aimp --formula \"imp(p,q)\"");
    check_schema(j, "reduce_make");
    CHECK(j["image"] == "aimp(w,w,aimp(w,p,q))");

    auto v = out_json("reduce verify --kind oxor --arity 2");
    check_schema(v, "reduce_verify");
    CHECK(v["pass"] == true);

    auto mv = out_json("reduce verify --kind modal_diamond --arity 2 --model-bound 3");
    CHECK(mv["pass"] == true);
    CHECK(mv["at_bound"] == true);

    auto bad = out_json("reduce verify --kind aimp --arity 2 --mutate");
    CHECK(bad["pass"] == false);
    CHECK(bad.contains("counterexample"));
}

TEST_CASE("modal subcommands") {
    std::string model =
        R"('{"worlds":["u","v"],"rel":[["u","v"]],"val":{"v":["p"]},"point":"u"}')";
    auto j = out_json("modal mc --formula \"dia(p)\" --model " + model);
    check_schema(j, "modal_mc");
    CHECK(j["value"] == 1);

    auto cl = out_json("modal clos --logic K --modal diamond,box --clone V2");
    check_schema(cl, "modal_clos");
    CHECK(cl["exact"]["family"] == "V2");

    auto gl = out_json("modal clos --logic GL --modal diamond,box --clone V2");
    check_schema(gl, "modal_clos");
    CHECK(gl["interval"]["lower"]["family"] == "V2");
    CHECK(gl["interval"]["upper"]["family"] == "V");
    REQUIRE(gl.contains("notes"));

    auto lq = out_json("modal leq --logic K --modal diamond --lhs and --rhs \"and,or\"");
    CHECK(lq["leq"] == true);

    auto cm = out_json("modal complete --logic K --modal diamond --basis \"and,not\"");
    check_schema(cm, "modal_complete");
    CHECK(cm["complete"] == "Yes");
}

TEST_CASE("exit codes and error JSON") {
    // domain error: arity out of range -> exit 1 with a stable code string
    auto r = run_cli("clone id --basis 9:ff");
    CHECK(r.exit_code == 1);
    auto j = json::parse(r.out);
    check_schema(j, "error");
    CHECK(j["error"]["code"] == "ArityOutOfRange");

    auto undeclared = run_cli("sat --formula \"and(p,not(q))\" --basis and");
    CHECK(undeclared.exit_code == 1);
    CHECK(json::parse(undeclared.out)["error"]["code"] == "UndeclaredConnective");

    // usage error -> exit 2
    CHECK(run_cli("clone id").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);

    // config file + flag override
    {
        std::ofstream out("/tmp/clonekit_cfg_test.json");
        out << R"({"degree_cap":3})";
    }
    auto ok = run_cli("--config /tmp/clonekit_cfg_test.json clone id --basis "
                      "\"threshold(4,2)\"");
    CHECK(ok.exit_code == 0);
    auto over = run_cli("--config /tmp/clonekit_cfg_test.json --degree-cap 2 clone id "
                        "--basis \"threshold(4,2)\"");
    CHECK(over.exit_code == 1);
    CHECK(json::parse(over.out)["error"]["code"] == "DegreeCapExceeded");
}

TEST_CASE("round trip: clone id of base_of names the same clone") {
    // exercised through the CLI for a few parameterized instances
    for (const std::string name :
         {std::string("D2"), std::string("L2"), std::string("S00^3")}) {
        auto cl = out_json("modal clos --logic K --modal none --clone " + name);
        CHECK(cl["exact"].contains("family"));
    }
}
