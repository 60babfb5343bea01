#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "test_util.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Runs the installed binary with the given arguments, capturing both streams.
Run cli(const std::string& args) {
    static int counter = 0;
    const auto dir = std::filesystem::temp_directory_path();
    const auto out_f = dir / ("sbvr2ocl_test_out_" + std::to_string(++counter));
    const auto err_f = dir / ("sbvr2ocl_test_err_" + std::to_string(counter));
    const std::string cmd = std::string(SBVR2OCL_BIN) + " " + args + " > '" + out_f.string() +
                            "' 2> '" + err_f.string() + "'";
    int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_f);
    r.err = slurp(err_f);
    std::filesystem::remove(out_f);
    std::filesystem::remove(err_f);
    return r;
}

std::string q(const std::string& path) { return "'" + path + "'"; }

std::string vocab_arg() { return "--vocab " + q(testutil::data_path("bank.vocab")); }

} // namespace

TEST_CASE("transpile renders the reference rules byte-for-byte") {
    const std::string args =
        "transpile " + vocab_arg() + " --rules " + q(testutil::data_path("corpus.sbvr"));
    Run r = cli(args);
    CHECK(r.code == 0);
    CHECK(r.out == testutil::read_file(testutil::data_path("corpus.expected.ocl")));
    CHECK(r.err.find("rule 33: warning W_OPERATIVE_AS_INV") != std::string::npos);

    // Byte-identical on a second run.
    CHECK(cli(args).out == r.out);
}

TEST_CASE("strict mode turns warnings into a failing exit") {
    Run r = cli("transpile --strict " + vocab_arg() + " --rules " +
                q(testutil::data_path("corpus.sbvr")));
    CHECK(r.code == 1);
}

TEST_CASE("transpile writes to a file when asked") {
    const auto out_path = std::filesystem::temp_directory_path() / "sbvr2ocl_test_transpiled.ocl";
    std::filesystem::remove(out_path);
    Run r = cli("transpile " + vocab_arg() + " --rules " + q(testutil::data_path("corpus.sbvr")) +
                " -o " + q(out_path.string()));
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(out_path) == testutil::read_file(testutil::data_path("corpus.expected.ocl")));
    std::filesystem::remove(out_path);
}

TEST_CASE("check prints pipeline counts on one line") {
    Run clean = cli("check " + vocab_arg() + " --rules " + q(testutil::data_path("corpus.sbvr")));
    CHECK(clean.code == 0);
    CHECK(clean.out == "parsed=33 mapped=33 warnings=1 errors=0\n");

    Run bad = cli("check " + vocab_arg() + " --rules " + q(testutil::data_path("errors.sbvr")));
    CHECK(bad.code == 1);
    CHECK(bad.out == "parsed=7 mapped=7 warnings=0 errors=3\n");
    CHECK(bad.err.find("error E_SYNTAX (3:1): expected a modality phrase such as 'It is "
                       "necessary that' at the start of the sentence") != std::string::npos);
    CHECK(bad.err.find("error E_UNKNOWN_FACT (5:36): no fact type 'customer flies account'") !=
          std::string::npos);
    CHECK(bad.err.find("error E_UNKNOWN_TERM (7:27): unknown term 'zebra'") != std::string::npos);
}

TEST_CASE("an ill-typed translation fails with a located diagnostic") {
    Run r = cli("transpile " + vocab_arg() + " --rules " +
                q(testutil::data_path("mismatch.sbvr")));
    CHECK(r.code == 1);
    CHECK(r.out.empty()); // nothing clean to emit
    CHECK(r.err.find("rule 1: error E_TYPE_MISMATCH: ordered comparison requires Integer "
                     "operands, found String and Integer (at body)") != std::string::npos);
}

TEST_CASE("eval prints one verdict line per invariant under both semantics") {
    const std::string base = "eval " + vocab_arg() + " --rules " +
                             q(testutil::data_path("eval.sbvr")) + " --snapshot " +
                             q(testutil::data_path("eval.snap"));
    Run both = cli(base);
    CHECK(both.code == 0);
    CHECK(both.out == "rule_1 sbvr=t ocl=t\nrule_2 sbvr=f ocl=u\n");

    CHECK(cli(base + " --semantics sbvr").out == "rule_1 sbvr=t\nrule_2 sbvr=f\n");
    CHECK(cli(base + " --semantics ocl").out == "rule_1 ocl=t\nrule_2 ocl=u\n");
    CHECK(cli(base + " --semantics nonsense").code == 2);
}

TEST_CASE("eval rejects a snapshot that does not fit the vocabulary") {
    Run r = cli("eval " + vocab_arg() + " --rules " + q(testutil::data_path("eval.sbvr")) +
                " --snapshot " + q(testutil::data_path("badclass.snap")));
    CHECK(r.code == 1);
    CHECK(r.err.find("error E_CLASS_UNKNOWN (1:13)") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("report tabulates feature usage for the reference rules") {
    Run r = cli("report " + vocab_arg() + " --rules " + q(testutil::data_path("corpus.sbvr")));
    CHECK(r.code == 0);
    CHECK(r.out.find("feature               sbvr  ocl  usage\n") == 0);
    CHECK(r.out.find("Invariants            yes   yes     29\n") != std::string::npos);
    CHECK(r.out.find("Pre/post conditions   yes   yes      4\n") != std::string::npos);
    CHECK(r.out.find("Set collection        yes   yes     33\n") != std::string::npos);
    CHECK(r.out.find("Counting quantifiers  yes   yes     11\n") != std::string::npos);
}

TEST_CASE("report still tabulates when a rule cannot be mapped") {
    Run r = cli("report " + vocab_arg() + " --rules " + q(testutil::data_path("matrix.sbvr")));
    CHECK(r.code == 0); // mapping-stage losses are what the matrix reports
    CHECK(r.err.find("rule 1: error E_INDIVIDUAL_CONCEPT") != std::string::npos);
    CHECK(r.out.find("Individual concepts   yes   no       1\n") != std::string::npos);
    CHECK(r.out.find("Set collection        yes   yes      1\n") != std::string::npos);
}

TEST_CASE("report emits machine-readable json on request") {
    Run r = cli("report --format json " + vocab_arg() + " --rules " +
                q(testutil::data_path("corpus.sbvr")));
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("version") == 1);
    REQUIRE(doc.at("rows").size() == 12);
    CHECK(doc["rows"][6]["feature"] == "Invariants");
    CHECK(doc["rows"][6]["usage_count"] == 29);
}

TEST_CASE("bad invocations exit with the usage code") {
    CHECK(cli("transpile --rules " + q(testutil::data_path("corpus.sbvr"))).code == 2);
    CHECK(cli("frobnicate").code == 2);
    CHECK(cli("").code == 2);

    Run unreadable =
        cli("check " + vocab_arg() + " --rules /nonexistent/nowhere.sbvr");
    CHECK(unreadable.code == 2);
    CHECK(unreadable.err.find("cannot read") != std::string::npos);
}

TEST_CASE("help is available and exits cleanly") {
    Run r = cli("--help");
    CHECK(r.code == 0);
    CHECK(r.out.find("Usage") != std::string::npos);
    CHECK(r.out.find("transpile") != std::string::npos);
}
