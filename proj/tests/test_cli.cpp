#include <doctest.h>

#include <sstream>

#include "almukai/json_io.hpp"
#include "cli.hpp"

using namespace almukai;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "almukai");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  return text.find("\r\n" + line + "\r\n") != std::string::npos;
}

}  // namespace

TEST_CASE("table") {
  const Result r = call({"table", "--d-min", "1", "--d-max", "30"});
  REQUIRE(r.code == cli::kSuccess);
  CHECK(r.out.rfind("d,omega,exact_divisors,fm_number,al_fr_index\r\n", 0) == 0);
  CHECK(has_line(r.out, "1,0,1,1,1"));
  CHECK(has_line(r.out, "6,2,4,2,2"));
  CHECK(has_line(r.out, "30,3,8,4,4"));
  CHECK(call({"table", "--d-min", "5", "--d-max", "4"}).code == cli::kUsageError);
  CHECK(call({"table", "--d-min", "0"}).code == cli::kUsageError);
  CHECK(call({"table", "--format", "xml"}).code == cli::kUsageError);
}

TEST_CASE("partners") {
  const Result one = call({"partners", "--d", "1"});
  REQUIRE(one.code == cli::kSuccess);
  const Json j1 = Json::parse(one.out);
  CHECK(j1.at("labels")[0].at("moduli") == "M_L(1+L+1)");

  const Result six = call({"partners", "-d", "6"});
  REQUIRE(six.code == cli::kSuccess);
  const Json j6 = Json::parse(six.out);
  CHECK(j6.at("fm_number") == "2");
  CHECK(j6.at("labels")[0].at("coset_level") == "6");
  CHECK(j6.at("labels")[1].at("coset_level") == "3");
  const ALElement w = al_element_from_json(j6.at("labels")[1].at("transform"));
  CHECK(w == induced_transform(6, 2).image);

  CHECK(call({"partners"}).code == cli::kUsageError);
  CHECK(call({"partners", "--d", "0"}).code == cli::kUsageError);
}

TEST_CASE("classify") {
  const Result id = call({"classify", "--d", "6"}, to_json(IsometryN::identity(6)).dump());
  REQUIRE(id.code == cli::kSuccess);
  const Json j = Json::parse(id.out);
  CHECK(j.at("level") == "1");
  CHECK(j.at("fricke") == true);
  CHECK(j.at("discriminant_unit") == "1");
  CHECK(j.at("orientation") == true);

  const Json w2{{"d", "6"}, {"matrix", to_json(represent(base_element(6, 2)))}};
  const Result r2 = call({"classify"}, w2.dump());
  REQUIRE(r2.code == cli::kSuccess);
  const Json k = Json::parse(r2.out);
  CHECK(k.at("level") == "2");
  CHECK(k.at("fricke") == false);
  CHECK(al_element_from_json(k.at("preimage")) == base_element(6, 2));

  const Result tuple = call({"classify", "-"}, to_json(base_element(30, 30)).dump());
  REQUIRE(tuple.code == cli::kSuccess);
  CHECK(Json::parse(tuple.out).at("discriminant_unit") == "59");

  const std::string scaled = R"([["2","0","0"],["0","1","0"],["0","0","1"]])";
  CHECK(call({"classify", "--d", "6"}, scaled).code == cli::kClassificationFailed);
  CHECK(call({"classify", "--d", "6"}, "[[1, 2").code == cli::kParseError);
  CHECK(call({"classify"}, scaled).code == cli::kUsageError);
  CHECK(call({"classify", "/nonexistent/input.json"}).code == cli::kParseError);
}

TEST_CASE("verify") {
  const std::vector<std::string> args{"verify", "--d-min", "1", "--d-max", "8", "--samples", "10",
                                      "--seed", "7"};
  const Result a = call(args);
  const Result b = call(args);
  REQUIRE(a.code == cli::kSuccess);
  CHECK(a.out == b.out);
  const Json j = Json::parse(a.out);
  CHECK(j.at("passed") == true);
  CHECK(j.at("levels").size() == 8);

  auto single = args;
  single.insert(single.end(), {"--threads", "1"});
  CHECK(call(single).out == a.out);

  auto strict = args;
  strict.insert(strict.end(), {"--tol", "1e-300"});
  CHECK(call(strict).code == cli::kVerificationFailed);

  CHECK(call({"verify", "--d-min", "3", "--d-max", "2"}).code == cli::kUsageError);
  CHECK(call({"verify", "--samples", "0"}).code == cli::kUsageError);
}
