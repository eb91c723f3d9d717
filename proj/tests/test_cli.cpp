#include "doctest.h"

#include "forest_hopf/cli.hpp"

#include <sstream>
#include <string>
#include <vector>

using namespace fhopf;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "forest-hopf");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("operations") {
    CHECK(run({"parse", "x + x", "--alphabet", "x"}).out == "2*x\n");
    CHECK(run({"mul", "--algebra", "rb", "[]", "[]"}).out == "2*[[]] + L*[]\n");
    CHECK(run({"--weight", "0", "mul", "--algebra", "rb", "[]", "[]"}).out == "2*[[]]\n");
    CHECK(run({"mul", "[]", "a"}).out == "[] a\n");
    CHECK(run({"coprod", "--algebra", "ck", "[x]", "--alphabet", "x"}).out == "[x] (x) 1 + x (x) [] + 1 (x) [x]\n");
    CHECK(run({"antipode", "[x]", "--alphabet", "x"}).out == "-[x] + x []\n");
    CHECK(run({"antipode", "--algebra", "rb", "[x]", "--alphabet", "x", "--weight", "0"}).out == "-[x] + x []\n");
    CHECK(run({"phi", "[] []"}).out == "2*[[]] + L*[]\n");
    CHECK(run({"theta", "--direction", "to-word", "a [b]", "--format", "json"}).out ==
          "{\"terms\":[{\"coeff\":{\"0\":\"1\"},\"word\":[\"a\",{\"b\":[\"b\"]}]}]}\n");
    CHECK(run({"enumerate", "rbf", "--max-vertices", "2", "--alphabet", "x"}).out.find("count: 8\n") !=
          std::string::npos);
}

TEST_CASE("input sources") {
    CHECK(run({"parse", "-"}, "a + a").out == "2*a\n");
    Run j = run({"parse", "a - 2*[b]", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(run({"parse", "-"}, j.out).out == run({"parse", "a - 2*[b]"}).out);
    CHECK(run({"parse", "@/nonexistent/file"}).code == kExitUsage);
}

TEST_CASE("exit codes") {
    CHECK(run({"parse", "[q]"}).code == kExitUsage);
    CHECK(run({"parse", "[a"}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"--alphabet", "a,a", "parse", "a"}).code == kExitUsage);
    CHECK(run({"mul", "--algebra", "rb", "[] []", "a"}).code == kExitDomain);
    CHECK(run({"phi", "a[b]"}).code == kExitDomain);
    CHECK(run({"theta", "a[b]"}).code == kExitDomain);
    CHECK(run({"antipode", "--algebra", "rb", "[a]"}).code == kExitWeight);
    CHECK(run({"antipode", "--algebra", "rb", "[a]", "--weight", "1"}).code == kExitWeight);
    CHECK(run({"check", "antipode-rb0", "--weight", "1", "--max-vertices", "2"}).code == kExitWeight);
    CHECK(run({"check", "nope"}).code == kExitUsage);
    CHECK(run({"check", "compat", "--max-vertices", "3"}).code == kExitOk);
}

TEST_CASE("output is deterministic") {
    Run a = run({"check", "all", "--max-vertices", "3"});
    Run b = run({"check", "all", "--max-vertices", "3"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(run({"coprod", "--algebra", "rb", "[[a] b [a]]"}).out ==
          run({"coprod", "--algebra", "rb", "[[a] b [a]]"}).out);
}
