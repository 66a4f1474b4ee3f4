#include "doctest.h"

#include "ainf/error.hpp"
#include "ainf_cli/cli.hpp"
#include "ainf_cli/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ainf;
using namespace ainf::cli;

namespace {

std::string data(const char* name) { return std::string(AINF_DATA_DIR) + "/" + name; }

struct Run {
    int code;
    std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path temp(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("ainf_test_cli_" + name);
}

}  // namespace

TEST_CASE("check exit codes") {
    CHECK(run_cli({"check", data("t4.json")}).code == 0);
    auto bad = run_cli({"check", data("corrupted_product.json")});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("associativity: FAIL at (w, w, w)") != std::string::npos);
    CHECK(run_cli({"check", data("malformed.json")}).code == 2);
    CHECK(run_cli({"check", data("does_not_exist.json")}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"transfer", data("t4.json"), "--pmax", "0"}).code == 2);
    CHECK(run_cli({"check", data("t4_symplectic.json")}).code == 0);
}

TEST_CASE("transfer reports") {
    auto cp2 = run_cli({"transfer", data("cp2.json"), "--strict-unital"});
    CHECK(cp2.code == 0);
    CHECK(cp2.out.find("certified: m_p = 0 for all p >= 3") != std::string::npos);
    auto kt = run_cli({"transfer", data("kodaira_thurston.json"), "--pmax", "4"});
    CHECK(kt.code == 0);
    CHECK(kt.out.find("m_3 != 0") != std::string::npos);
    auto t4 = run_cli({"transfer", data("t4.json"), "--pmax", "4", "--strict-unital"});
    CHECK(t4.code == 0);
    CHECK(t4.out.find("m_4 = 0") != std::string::npos);
    CHECK(t4.out.find("certified: no vanishing bound") != std::string::npos);
}

TEST_CASE("tty, pdcorrect and witnesses") {
    CHECK(run_cli({"tty", data("t4_symplectic.json")}).code == 0);
    CHECK(run_cli({"tty", data("kt_symplectic.json")}).code == 0);
    auto kt0 = run_cli({"tty", data("kt_symplectic.json"), "--level", "0", "--pmax", "3"});
    CHECK(kt0.code == 1);
    CHECK(kt0.out.find("stasheff-3: FAIL at (+e1, +e3, +e4)") != std::string::npos);
    CHECK(run_cli({"tty", data("t4.json")}).code == 2);

    auto s3 = run_cli({"pdcorrect", data("s3xs3.json")});
    CHECK(s3.code == 0);
    CHECK(s3.out.find("verdict: m_p = 0 for p >= 3") != std::string::npos);
    CHECK(run_cli({"pdcorrect", data("pd_synthetic.json")}).code == 0);
    CHECK(run_cli({"pdcorrect", data("t4.json")}).code == 2);

    auto torus = run_cli({"torus-witness", "--n", "2"});
    CHECK(torus.code == 0);
    CHECK(torus.out.find("verdict: not formal") != std::string::npos);
    CHECK(run_cli({"cpn-witness", "--n", "3"}).code == 0);
}

TEST_CASE("extend") {
    auto r = run_cli({"extend", data("cp2.json"), "--omega", "w"});
    CHECK(r.code == 0);
    CHECK(r.out.find("extension betti: 0:1 5:1") != std::string::npos);
    auto kt = run_cli({"extend", data("kodaira_thurston.json"), "--omega", "e1*e3 + e2*e4"});
    CHECK(kt.code == 0);
    CHECK(kt.out.find("formal model skipped") != std::string::npos);
    CHECK(run_cli({"extend", data("t4.json"), "--omega", "e1"}).code == 2);
}

TEST_CASE("certificates are deterministic and round-trip") {
    auto a = temp("a.json"), b = temp("b.json");
    for (const auto& cmd : std::vector<std::vector<std::string>>{
             {"transfer", data("kodaira_thurston.json"), "--pmax", "4"},
             {"pdcorrect", data("pd_synthetic.json"), "--jobs", "2"},
             {"torus-witness", "--n", "2"}}) {
        auto first = cmd, second = cmd;
        first.insert(first.end(), {"--out", a.string()});
        second.insert(second.end(), {"--out", b.string()});
        run_cli(first);
        run_cli(second);
        CHECK(slurp(a) == slurp(b));
        CHECK_FALSE(slurp(a).empty());
    }

    run_cli({"transfer", data("kodaira_thurston.json"), "--pmax", "4", "--out", a.string()});
    auto cert = json::parse(slurp(a));
    CHECK(cert["schema"] == kCertificateSchema);
    CHECK(cert["input_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
    std::ofstream(b) << cert["result"]["minimal"].dump();
    CHECK(run_cli({"check", b.string(), "--pmax", "4"}).code == 0);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
}

TEST_CASE("element parsing and digest") {
    auto f = load_algebra(data("t4.json"), 6);
    const Dga& t = *f.dga;
    CHECK(parse_element(t, "e1*e2 + e3*e4") == t.element("e1*e2") + t.element("e3*e4"));
    CHECK(parse_element(t, "-1/2*e2*e1") == Scalar(1, 2) * t.element("e1*e2"));
    CHECK(parse_element(t, "3 - e1") == Scalar(3) * t.element("1") - t.element("e1"));
    CHECK_THROWS_AS(parse_element(t, "e9"), MalformedInput);
    CHECK(digest("") == "fnv1a64:cbf29ce484222325");
    CHECK(digest("a") == "fnv1a64:af63dc4c8601ec8c");
}
