#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "e7/io.hpp"
#include "e7/rep56.hpp"
#include "e7/suites.hpp"

using namespace e7;

TEST_CASE("matrix JSON round trips") {
  IntegerRing Z;
  RationalField Q;
  PrimeField F(11);
  auto mz = root_unipotent(Z, RootSystem::get().e7_roots()[5], Integer(3));
  mz(0, 1) = Integer("123456789012345678901234567890");
  CHECK(std::get<Matrix<IntegerRing>>(matrix_from_json(to_json(mz))) == mz);

  auto mq = torus_weight(Q, Rational(2, 3));
  auto jq = to_json(mq);
  CHECK(jq["ring"] == "rat");
  CHECK(std::get<Matrix<RationalField>>(matrix_from_json(jq)) == mq);

  auto mf = random_invertible(F, 3);
  auto jf = to_json(mf);
  CHECK(jf["p"] == 11);
  auto back = std::get<Matrix<PrimeField>>(matrix_from_json(jf));
  CHECK(back == mf);
  CHECK(back.ring().characteristic() == 11);

  // Through a file.
  const std::string path = "test_io_matrix.json";
  std::ofstream(path) << jq.dump();
  CHECK(std::get<Matrix<RationalField>>(read_matrix_file(path)) == mq);
  std::remove(path.c_str());
}

TEST_CASE("malformed matrices") {
  auto good = to_json(Matrix<IntegerRing>::identity(IntegerRing{}, 2));
  CHECK_NOTHROW(matrix_from_json(good));
  auto bad = [&](auto edit) {
    Json j = good;
    edit(j);
    CHECK_THROWS_AS(matrix_from_json(j), ParseError);
  };
  bad([](Json& j) { j["ring"] = "complex"; });
  bad([](Json& j) { j.erase("rows"); });
  bad([](Json& j) { j["cols"] = 3; });
  bad([](Json& j) { j["entries"] = "none"; });
  bad([](Json& j) { j["entries"][0][0] = "x"; });
  bad([](Json& j) {
    j["ring"] = "fp";
    j["p"] = 9;
  });
  bad([](Json& j) { j["ring"] = "fp"; });
  bad([](Json& j) {
    j["ring"] = "rat";
    j["entries"][0][0] = "1/0";
  });
  CHECK_THROWS_AS(read_matrix_file("/nonexistent/matrix.json"), ParseError);
  const std::string path = "test_io_garbage.json";
  std::ofstream(path) << "{ not json";
  CHECK_THROWS_AS(read_matrix_file(path), ParseError);
  std::remove(path.c_str());
}

TEST_CASE("dump contents") {
  auto roots = dump_roots();
  CHECK(roots.size() == 240);
  auto weights = dump_weights();
  REQUIRE(weights.size() == 56);
  CHECK(weights[0]["ordinal"] == 1);
  CHECK(weights[55]["ordinal"] == 56);
  CHECK(weights[0]["bar"] == 56);
  auto quadrics = dump_quadrics();
  CHECK(quadrics.size() == 133);
  CHECK(quadrics[0]["monomials"].size() == 6);
  for (const auto& m : quadrics[132]["monomials"]) {
    CHECK(m["i"].get<int>() >= 1);
    CHECK(m["j"].get<int>() <= 56);
  }
  CHECK(dump_form_h().size() == 56);
  CHECK(dump_form_f().size() > 0);
  CHECK(dump_constants().size() > 0);
}

TEST_CASE("dumps are deterministic") {
  CHECK(dump_quadrics().dump() == dump_quadrics().dump());
  CHECK(dump_form_f().dump() == dump_form_f().dump());
  for (const char* t : {"roots", "weights", "constants", "quadrics", "form-f", "form-h"}) {
    CAPTURE(t);
    CHECK(dump_text(t) == dump_text(t));
    CHECK(!dump_text(t).empty());
  }
  CHECK_THROWS(dump_text("nope"));
  CHECK(build_id().rfind("e7tool", 0) == 0);
}
