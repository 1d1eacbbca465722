#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "carlab/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = carlab::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

fs::path scratch(const std::string& name) {
    const fs::path d = fs::temp_directory_path() / ("carlab_cli_" + name);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

const std::vector<std::string> kSmallSweep = {"carleman-sweep", "--n", "128", "--L", "4", "--t",
                                              "0:4:1", "--fn", "bump:1,0,0.25", "--no-timestamp"};

}  // namespace

TEST_CASE("help and usage errors") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"carleman-sweep", "--help"}).code == 0);
    CHECK(run({}).code == 2);
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"carleman-sweep", "--n", "100", "--fn", "bump:1,0,0.25"}).code == 2);
    CHECK(run({"carleman-sweep", "--p", "2.0", "--fn", "bump:1,0,0.25"}).code == 2);

    const Run missing = run({"carleman-sweep", "--n", "128"});
    CHECK(missing.code == 2);
    const Run unknown = run({"carleman-sweep", "--n", "128", "--fn", "nosuch:1"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("bump:cx,cy,r") != std::string::npos);
    CHECK(run({"kernel-bound", "--n", "64", "--L", "32pi", "--k", "-3:3:1"}).code == 2);
}

TEST_CASE("report document") {
    const Run r = run(kSmallSweep);
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["schema"] == "carlab-report/1");
    CHECK(doc["command"] == "carleman-sweep");
    CHECK(doc["status"] == "pass");
    CHECK(doc["exit_code"] == 0);
    CHECK_FALSE(doc.contains("generated_at"));
    CHECK(doc["config"]["grid"]["n"] == 128);
    const json& rep = doc["reports"][0];
    CHECK(rep["check"] == "carleman_sweep");
    CHECK(rep["pass"] == true);
    CHECK(rep["constants"][0]["cap_provenance"] == "refinement_oracle");
    CHECK(rep["constants"][0]["series"].size() == 5);
    CHECK(r.err.find("PASS") != std::string::npos);

    std::vector<std::string> stamped = kSmallSweep;
    stamped.pop_back();
    CHECK(json::parse(run(stamped).out).contains("generated_at"));
}

TEST_CASE("csv output") {
    std::vector<std::string> a = kSmallSweep;
    a.insert(a.end(), {"--format", "csv"});
    const Run r = run(a);
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("check,constant,axis,axis_value,ratio,cap,witness\n", 0) == 0);
    CHECK(r.out.find("carleman_sweep,carleman_ratio,t,4,") != std::string::npos);
    a.back() = "xml";
    CHECK(run(a).code == 2);
}

TEST_CASE("determinism") {
    CHECK(run(kSmallSweep).out == run(kSmallSweep).out);

    const std::vector<std::string> tk = {"tk-ratio", "--n", "256", "--L", "8pi", "--k", "-1:0:1",
                                         "--seed", "3", "--no-timestamp"};
    const Run a = run(tk), b = run(tk);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);

    std::vector<std::string> other = tk;
    other[8] = "4";
    CHECK(run(other).out != a.out);
}

TEST_CASE("output files") {
    const fs::path dir = scratch("out");
    std::vector<std::string> a = kSmallSweep;
    a.insert(a.end(), {"--out", dir.string() + "/", "--dump-fields"});
    REQUIRE(run(a).code == 0);
    REQUIRE(run(a).code == 0);

    std::vector<fs::path> reports, dumps;
    for (const auto& e : fs::directory_iterator(dir)) {
        const auto ext = e.path().extension();
        if (ext == ".json") reports.push_back(e.path());
        if (ext == ".crf") dumps.push_back(e.path());
        CHECK(ext != ".tmp");
    }
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].filename().string().rfind("carleman-sweep-", 0) == 0);
    CHECK(reports[0].stem().string().size() == std::string("carleman-sweep-").size() + 16);
    CHECK(dumps.empty());
    CHECK(json::parse(slurp(reports[0]))["status"] == "pass");

    const fs::path file = dir / "named.json";
    std::vector<std::string> b = kSmallSweep;
    b.insert(b.end(), {"--out", file.string(), "--dump-fields"});
    const Run r = run(b);
    CHECK(r.code == 0);
    CHECK(r.out == "wrote " + file.string() + "\n");
    CHECK(slurp(file) == slurp(reports[0]));

    // solve-dbar has fields to dump
    const Run s = run({"solve-dbar", "--n", "64", "--potential", "vpow:0,0.5,0.1", "--no-timestamp",
                       "--out", dir.string() + "/", "--dump-fields"});
    CHECK(s.code == 0);
    int crf = 0;
    for (const auto& e : fs::directory_iterator(dir)) crf += e.path().extension() == ".crf";
    CHECK(crf == 2);
    fs::remove_all(dir);
}

TEST_CASE("config file with command-line override") {
    const fs::path dir = scratch("cfg");
    const fs::path cfg = dir / "run.cfg";
    {
        std::ofstream f(cfg);
        f << "n=128\nL=4\nt=0:3:1\nfn=bump:1,0,0.25\nno-timestamp=true\n";
    }
    const Run base = run({"carleman-sweep", "--config", cfg.string()});
    REQUIRE(base.code == 0);
    const json d = json::parse(base.out);
    CHECK(d["config"]["grid"]["n"] == 128);
    CHECK(d["reports"][0]["constants"][0]["series"].size() == 4);

    const Run over = run({"carleman-sweep", "--config", cfg.string(), "--n", "256"});
    REQUIRE(over.code == 0);
    CHECK(json::parse(over.out)["config"]["grid"]["n"] == 256);
    fs::remove_all(dir);
}

TEST_CASE("checked-property failures exit 1") {
    const Run c = run({"solve-dbar", "--n", "128", "--potential", "vpow:0,0.5,10", "--no-timestamp"});
    CHECK(c.code == 1);
    const json d = json::parse(c.out);
    CHECK(d["status"] == "fail");
    CHECK(c.err.find("FAIL") != std::string::npos);

    const Run ok = run({"solve-dbar", "--n", "128", "--potential", "vpow:0,0.5,0.1", "--no-timestamp"});
    CHECK(ok.code == 0);

    const Run ctrl = run({"uc-demo", "--n", "256", "--t", "0:8:1", "--seed-field",
                          "bump:0.12,0,0.06", "--no-timestamp"});
    CHECK(ctrl.code == 1);
}

TEST_CASE("leakage is a usage error") {
    const Run r = run({"lp-chain", "--n", "256", "--L", "8pi", "--k", "-1:0:1", "--fn", "noise",
                       "--no-timestamp"});
    CHECK(r.code == 2);
}

TEST_CASE("fnv1a") {
    CHECK(carlab::fnv1a("") == 0xcbf29ce484222325ULL);
    CHECK(carlab::fnv1a("a") == 0xaf63dc4c8601ec8cULL);
}
