#include <gtest/gtest.h>

#include "nil7/io.hpp"

using namespace nil7;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST(Io, Fields) {
  EXPECT_EQ(parse_field("Q"), Field::rationals());
  EXPECT_EQ(parse_field("Fp", 7), Field::prime(7));
  EXPECT_EQ(parse_field("F_5"), Field::prime(5));
  EXPECT_EQ(parse_field("R"), Field::reals());
  EXPECT_EQ(parse_field("Qbar"), Field::alg_closed());
  EXPECT_EQ(code_of([] { parse_field("Fp"); }), ErrorCode::InvalidField);
  EXPECT_EQ(code_of([] { parse_field("Fp", 9); }), ErrorCode::InvalidField);
  EXPECT_EQ(code_of([] { parse_field("C"); }), ErrorCode::InvalidField);
  EXPECT_EQ(to_json(Field::prime(5)), Json::parse(R"({"field":"Fp","p":5})"));
}

TEST(Io, Scalars) {
  const Field q = Field::rationals(), f7 = Field::prime(7);
  EXPECT_EQ(parse_scalar(q, "-6/4"), q.from_int(-3) / q.from_int(2));
  EXPECT_EQ(parse_scalar(f7, "1/2"), f7.from_int(4));
  EXPECT_EQ(to_json(parse_scalar(f7, "1/2")), Json(4));
  EXPECT_EQ(to_json(parse_scalar(q, "-6/4")), Json("-3/2"));
  EXPECT_EQ(code_of([&] { parse_scalar(f7, "1/7"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { parse_scalar(q, "two"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { parse_scalar(q, "1/0"); }), ErrorCode::ParseError);
}

TEST(Io, DifferentialsAndBracketsAgree) {
  const Presentation d = parse_presentation(R"({"field":"Q","dim":7,"differentials":{"7":"x1^x2 + x3^x4"}})");
  // [X1, X2] = -X7 under the dual convention dx7(X1, X2) = -x7([X1, X2]).
  const Presentation b = dualize(undualize(d));
  const Json sc = to_json(d);
  EXPECT_EQ(d, b);
  EXPECT_EQ(sc["differentials"]["7"], "x1^x2 + x3^x4");
  Json brackets = Json::array();
  const StructureConstants u = undualize(d);
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      for (int k = 0; k < 7; ++k)
        if (!u.get(i, j, k).is_zero()) brackets.push_back({i + 1, j + 1, k + 1, u.get(i, j, k).to_string()});
  Json doc = {{"field", "Q"}, {"dim", 7}, {"brackets", brackets}};
  EXPECT_EQ(presentation_from_json(doc), d);
}

TEST(Io, FieldOverride) {
  const auto p = parse_presentation(R"({"field":"Q","dim":7,"differentials":{"7":"x1^x2"}})", Field::prime(3));
  EXPECT_EQ(p.field, Field::prime(3));
  EXPECT_EQ(code_of([] { parse_presentation(R"({"dim":7,"differentials":{}})"); }), ErrorCode::InvalidField);
}

TEST(Io, ParseErrorsCarryPosition) {
  try {
    parse_presentation("{\n  \"field\": \"Q\",\n  \"dim\": 7,\n  oops\n}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
  EXPECT_EQ(code_of([] { parse_presentation(R"({"field":"Q","dim":7,"differentials":{"8":"x1^x2"}})"); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_presentation(R"({"field":"Q","dim":7,"brackets":[[1,1,3,"1"]]})"); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_presentation(R"({"field":"Q","dim":7})"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_presentation(R"({"field":"Q","dim":7,"differentials":{"7":"x1^^x2"}})"); }),
            ErrorCode::ParseError);
}

TEST(Io, CanonicalRoundTrip) {
  // Canonical differentials printed as JSON re-parse and re-classify to the same form.
  for (const Field& f : {Field::rationals(), Field::prime(5), Field::reals()}) {
    for (std::uint64_t s = 0; s < 24; ++s) {
      const auto rep = classify(random_presentation(6 - static_cast<int>(s % 3), 1 + static_cast<int>(s % 3), s, f));
      const Json out = to_json(rep);
      Json doc = to_json(f);
      doc["dim"] = 7;
      doc["differentials"] = out["canonical"]["model"];
      const Presentation again = parse_presentation(doc.dump());
      EXPECT_EQ(classify(again).canonical, rep.canonical) << doc.dump();
    }
  }
}

TEST(Io, ReportIsDeterministic) {
  const Presentation p = random_presentation(4, 3, 99);
  EXPECT_EQ(to_json(classify(p)).dump(), to_json(classify(p)).dump());
  const Json j = to_json(classify(parse_presentation(R"({"field":"Q","dim":7,"differentials":{"7":"x1^x2"}})")));
  EXPECT_EQ(j["canonical"]["row"], 1);
  EXPECT_EQ(j["canonical"]["label"], "L_3 ⊕ A_4");
  EXPECT_EQ(j["certificate"]["kind"], "base");
}
