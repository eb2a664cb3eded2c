#include "wildcount/error.hpp"
#include "wildcount/json_io.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>

using namespace wildcount;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const UserError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(JsonIo, FieldRoundTrip) {
  FiniteField F = FiniteField::create(3, 3);
  json j = field_to_json(F);
  EXPECT_EQ(j["modulus"], json(F.modulus()));
  EXPECT_TRUE(field_from_json(j) == F);
  EXPECT_TRUE(field_from_json(json{{"p", 3}, {"d", 3}}) == F);
  EXPECT_TRUE(field_from_json(json{{"p", 5}}) == FiniteField::create(5, 1));
  EXPECT_THROW(field_from_json(json{{"p", 3}, {"d", 2}, {"modulus", {1, 0, 0, 1}}}), UserError);
  EXPECT_THROW(field_from_json(json{{"d", 2}}), UserError);
}

TEST(JsonIo, RingDescription) {
  GaloisRing R(FiniteField::create(3, 2), 2);
  json j = ring_to_json(R);
  EXPECT_EQ(j["lifted_modulus"], json({1, 0, 1}));
  EXPECT_EQ(j["frobenius_image"].size(), 2u);
  EXPECT_EQ(j["n"], 2);
}

TEST(JsonIo, AlgebraRoundTripAndValidation) {
  LieAlgebraSpec h = LieAlgebra::heisenberg(3, 2).spec();
  LieAlgebraSpec back = algebra_from_json(algebra_to_json(h));
  EXPECT_EQ(back.orders, h.orders);
  ASSERT_EQ(back.brackets.size(), h.brackets.size());
  for (std::size_t i = 0; i < h.brackets.size(); ++i) EXPECT_EQ(back.brackets[i].value, h.brackets[i].value);
  json bad = json::parse(R"({"p": 3, "orders": [1, 1, 2], "brackets": [{"i": 0, "j": 1, "value": [0, 0, 1]}]})");
  EXPECT_NE(error_of([&] { LieAlgebra g(algebra_from_json(bad)); }).find("torsion incompatibility"),
            std::string::npos);
  EXPECT_NE(error_of([&] { algebra_from_json(json{{"p", 3}, {"orders", "x"}}); }).find("orders"), std::string::npos);
}

TEST(JsonIo, DatumRoundTrip) {
  auto lie = std::make_shared<const LieBaseChange>(std::make_shared<const LieAlgebra>(LieAlgebra::heisenberg(3, 1)),
                                                   FiniteField::create(3, 2));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    LocalDatum D(lie);
    for (std::int64_t b : {1, 2, 4, 5}) D.set(b, lie->from_index(rng() % lie->size()));
    const std::string text = datum_to_json(D).dump();
    LocalDatum back = datum_from_json(parse_json_text(text, "datum"));
    EXPECT_TRUE(back == D);
    EXPECT_EQ(lastjump(back), lastjump(D));
  }
}

TEST(JsonIo, DatumErrors) {
  json base = json::parse(R"({"field": {"p": 3, "d": 1}, "algebra": {"p": 3, "orders": [1]}, "support": []})");
  json dup = base;
  dup["support"] = json::parse(R"([{"b": 1, "value": [[1]]}, {"b": 1, "value": [[2]]}])");
  EXPECT_NE(error_of([&] { datum_from_json(dup); }).find("twice"), std::string::npos);
  json divisible = base;
  divisible["support"] = json::parse(R"([{"b": 3, "value": [[1]]}])");
  EXPECT_THROW(datum_from_json(divisible), UserError);
  json missing = base;
  missing.erase("algebra");
  EXPECT_NE(error_of([&] { datum_from_json(missing); }).find("algebra"), std::string::npos);
  EXPECT_THROW(datum_from_json(json::array()), UserError);
}

TEST(JsonIo, MalformedTextReportsPosition) {
  EXPECT_EQ(error_of([] { parse_json_text("{\n  \"p\": 3,\n  oops\n}", "in.json"); }), "in.json:3:3: malformed JSON");
  EXPECT_NE(error_of([] { read_json_file("/nonexistent/file.json"); }).find("cannot open"), std::string::npos);
}

TEST(JsonIo, ReportUsesCompactRationals) {
  AsymptoticsReport r;
  r.A = Rational(3);
  r.S = {Rational(1), Rational(4, 3)};
  r.B = 5;
  r.M = Rational(4);
  r.hypothesis_ok = true;
  EXPECT_EQ(report_to_json(r).dump(), R"({"A":"3","B":5,"M":"4","S":["1","4/3"],"flags":[],"hypothesis_ok":true})");
}
