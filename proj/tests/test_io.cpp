#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <json.hpp>
#include <sstream>

#include "overalg/io.hpp"
#include "overalg/sampling.hpp"

using namespace overalg;
using nlohmann::json;

TEST_CASE("matrix json round trip") {
  Rng rng(7);
  const CoefMatrix f = random_matrix(rng, Alpha(2.3), 4);
  const std::string text = matrix_to_json(f);
  const json j = json::parse(text);
  CHECK(j.at("alpha").get<double>() == 2.3);
  CHECK(j.at("coeffs").size() == 5);
  const CoefMatrix g = matrix_from_json(text);
  CHECK(g.alpha().value() == f.alpha().value());
  REQUIRE(g.max_k() == f.max_k());
  REQUIRE(g.max_l() == f.max_l());
  for (int k = 0; k <= f.max_k(); ++k)
    for (int l = 0; l <= f.max_l(); ++l) CHECK(g.at(k, l) == f.at(k, l));
  // serialization is deterministic
  CHECK(matrix_to_json(f) == text);
  CHECK(matrix_to_json(g) == text);
}

TEST_CASE("malformed matrix json is rejected") {
  CHECK_THROWS_AS(matrix_from_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(R"({"alpha": 2.0})"), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(R"({"alpha": 2.0, "coeffs": []})"), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(R"({"alpha": 2.0, "coeffs": [[[1,0],[0,0]],[[1,0]]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(R"({"alpha": 0.5, "coeffs": [[[1,0]]]})"),
                  std::invalid_argument);
  CHECK_THROWS(matrix_from_json("this is not json"));
}

TEST_CASE("density csv layout") {
  std::ostringstream os;
  write_density_csv(os, Alpha(2.0), 0.0, 3.0, 4);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "s,weight_left_form,weight_right_form,abs_diff");
  int rows = 0;
  double first_s = -1.0, last_s = -1.0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string cell;
    std::getline(ls, cell, ',');
    const double s = std::stod(cell);
    if (rows == 0) first_s = s;
    last_s = s;
    std::getline(ls, cell, ',');
    const double wl = std::stod(cell);
    std::getline(ls, cell, ',');
    const double wr = std::stod(cell);
    std::getline(ls, cell, ',');
    const double diff = std::stod(cell);
    CHECK(std::abs(wl - wr) == doctest::Approx(diff).epsilon(1e-12));
    if (s == 0.0) {
      CHECK(wl == 0.0);
      CHECK(wr == 0.0);
    }
    ++rows;
  }
  CHECK(rows == 4);
  CHECK(first_s == 0.0);
  CHECK(last_s == 3.0);
}

TEST_CASE("density csv degenerate grids") {
  std::ostringstream one;
  write_density_csv(one, Alpha(2.0), 1.5, 4.0, 1);
  std::istringstream in(one.str());
  std::string header, row, extra;
  std::getline(in, header);
  REQUIRE(std::getline(in, row));
  CHECK(!std::getline(in, extra));
  CHECK(row.substr(0, 4) == "1.5,");

  std::ostringstream none;
  write_density_csv(none, Alpha(2.0), 0.0, 5.0, 0);
  CHECK(none.str() == "s,weight_left_form,weight_right_form,abs_diff\n");
}

TEST_CASE("density csv is reproducible") {
  std::ostringstream a, b;
  write_density_csv(a, Alpha(2.75), 0.0, 12.0, 100);
  write_density_csv(b, Alpha(2.75), 0.0, 12.0, 100);
  CHECK(a.str() == b.str());
}
