#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "ttperm/ttperm.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "ttperm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  auto* old = std::cin.rdbuf(in.rdbuf());
  std::ostringstream out, err;
  const int code = ttperm::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  std::cin.rdbuf(old);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli: spectrum") {
  const auto r = run({"spectrum", "--p", "2", "--level", "1", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc.at("points") == json::array({"m0", "p1", "m1"}));
  CHECK(doc.at("edges") == json::parse(R"([["p1","m0"],["p1","m1"]])"));
  const auto zero = json::parse(run({"spectrum", "--p", "3", "--level", "0", "--format", "json"}).out);
  CHECK(zero.at("points").size() == 1);
  const auto pro = run({"spectrum", "--procyclic", "--depth", "2", "--format", "dot"});
  CHECK(pro.code == 0);
  CHECK(pro.out.find("minf") != std::string::npos);
  CHECK(run({"spectrum", "--p", "4", "--level", "1"}).code == ttperm::cli::kUsage);
}

TEST_CASE("cli: support of expressions and documents") {
  const auto kos = json::parse(run({"support", "--expr", "kos(1)", "--format", "json"}).out);
  CHECK(kos.at("mode") == "finite");
  CHECK(kos.at("points") == json::array({"m0"}));
  CHECK(kos.at("class") == "I");
  const auto perm = json::parse(run({"support", "--expr", "perm(2)", "--format", "json"}).out);
  CHECK(perm.at("mode") == "cofinite");
  CHECK(perm.at("class") == "II");
  const auto lvl = run({"support", "--expr", "perm(1)*kos(2)", "--level", "2", "--p", "3", "--format", "json"});
  CHECK(lvl.code == 0);
  CHECK(json::parse(lvl.out).at("points") == json::array({"m1"}));

  const std::string cone_id = R"({"p":2,"n":1,"modules":{"0":[1],"1":[1]},"differentials":{"1":[1]}})";
  const auto c = run({"support", "--file", "-", "--format", "json"}, cone_id);
  REQUIRE(c.code == 0);
  CHECK(json::parse(c.out).at("points").empty());

  CHECK(run({"support", "--expr", "kos("}).code == ttperm::cli::kParseError);
  CHECK(run({"support", "--file", "-"}, "{\"p\":").code == ttperm::cli::kParseError);
  CHECK(run({"support", "--file", "-"},
            R"({"p":2,"n":1,"modules":{"0":[1],"1":[0]},"differentials":{"1":[1,0]}})")
            .code == ttperm::cli::kInvariantViolation);
  CHECK(run({"support", "--file", "/nonexistent/doc.json"}).code != 0);
}

TEST_CASE("cli: ideals, koszul, motives, random") {
  CHECK(run({"ideals", "--level", "2"}).out.find("13") != std::string::npos);
  const auto sub = run({"ideals", "--subset", "finite:m0,p1,m1"});
  CHECK(sub.code == 0);
  CHECK(sub.out.find("kos(2)") != std::string::npos);
  CHECK(run({"ideals", "--subset", "finite:p1"}).code == ttperm::cli::kUsage);

  const auto k = run({"koszul", "--p", "2", "--level", "2", "--subgroup", "1", "--format", "json"});
  REQUIRE(k.code == 0);
  CHECK(ttperm::complex_from_json(k.out) == ttperm::koszul(ttperm::CyclicGroup(2, 2), ttperm::Subgroup{1}));
  CHECK(run({"koszul", "--p", "3", "--level", "3", "--subgroup", "0", "--format", "json"}).code ==
        ttperm::cli::kSizeLimit);

  CHECK(run({"motives", "--field-q", "4", "--coeff", "0"}).out.find("single point") != std::string::npos);
  CHECK(run({"motives", "--field-q", "6", "--coeff", "0"}).code == ttperm::cli::kUsage);
  const auto z = run({"motives", "--coeff", "Z", "--file", "-", "--format", "json"},
                     R"({"ring":"Z","order":1,"modules":{"0":[1],"1":[1]},"differentials":{"1":[5]}})");
  REQUIRE(z.code == 0);
  const auto zdoc = json::parse(z.out);
  CHECK(zdoc.at("generic") == false);
  CHECK(zdoc.at("type") == "I");

  const auto a = run({"random", "--p", "3", "--level", "2", "--seed", "9"});
  const auto b = run({"random", "--p", "3", "--level", "2", "--seed", "9"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK_NOTHROW(ttperm::complex_from_json(a.out));

  CHECK(run({}).code == ttperm::cli::kUsage);
  CHECK(run({"bogus"}).code == ttperm::cli::kUsage);
}
