#include "fatpart/config.hpp"
#include "fatpart/verify.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace fatpart;

TEST_CASE("the named case table is complete") {
    const auto& names = verify_case_names();
    CHECK(names.size() == 16);
    for (const std::string& want :
         {"schur-mean-sp", "schur-mean-orth", "schur-mean-qgin", "eq-I-gamma1", "eq-I-gamma2",
          "zu-mm-gamma1", "mixed-gamma1-sp", "mixed-gamma1-qgin", "mixed-gamma1-orth", "borodin",
          "gamma3-sp", "star", "chain-equalities", "orthmm-duality", "dse-weight", "cl-identity"})
        CHECK(std::find(names.begin(), names.end(), want) != names.end());
    CHECK_THROWS_AS(run_verify_case("no-such-case", VerifyOptions{}), std::invalid_argument);
}

TEST_CASE("exact cases pass") {
    VerifyOptions opt;
    for (const std::string& name : {"dse-weight", "cl-identity", "orthmm-duality",
                                    "mixed-gamma1-sp", "mixed-gamma1-qgin", "mixed-gamma1-orth",
                                    "borodin", "gamma3-sp", "star"}) {
        auto reports = run_verify_case(name, opt);
        CHECK(!reports.empty());
        CHECK(all_pass(reports));
    }
}

TEST_CASE("records are byte-stable and runtime-free") {
    VerifyOptions opt;
    auto a = run_verify_case("cl-identity", opt);
    auto b = run_verify_case("cl-identity", opt);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(report_record(a[i]) == report_record(b[i]));
        CHECK(report_record(a[i]).find("runtime") == std::string::npos);
    }
    CHECK(report_human(a[0]).find("ms") != std::string::npos);
}

TEST_CASE("model config files load through graph references") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "fatpart_cfg_test";
    fs::create_directories(dir);
    {
        RibbonGraph g = builtin_graph("gamma1");
        CornerAssignment a;
        a.N = 2;
        a.corners[1] = CornerSpec::J(1);
        a.corners[-1] = CornerSpec::Identity();
        save_graph_file((dir / "g.json").string(), g, a);
        std::ofstream cfg(dir / "m.json");
        cfg << R"({"graph_file":"g.json","face_specs":["miwa:-:3/10"],"cutoff":6})";
    }
    ModelConfig cfg = load_model_config((dir / "m.json").string());
    CHECK(cfg.N == 2);
    CHECK(cfg.cutoff == 6);
    CHECK(zu_mm_series(cfg).value == Rat(107, 200));
    // round-trip of the graph file bytes
    auto [g2, a2] = load_graph_file((dir / "g.json").string());
    save_graph_file((dir / "g2.json").string(), g2, a2);
    std::ifstream f1(dir / "g.json"), f2(dir / "g2.json");
    std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
    std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
    CHECK(s1 == s2);
    fs::remove_all(dir);
}

TEST_CASE("mc records are identical across thread counts") {
    VerifyOptions t1;
    t1.samples = 2000;
    t1.threads = 1;
    VerifyOptions t4 = t1;
    t4.threads = 4;
    auto a = run_verify_case("eq-I-gamma2", t1);
    auto b = run_verify_case("eq-I-gamma2", t4);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(report_record(a[i]) == report_record(b[i]));
}
