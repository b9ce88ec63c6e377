#include <gtest/gtest.h>

#include "cobound/errors.h"
#include "cobound/serialize.h"
#include "support.h"

namespace cobound {
namespace {

using support::Q;
using support::Vec;

TEST(Serialize, RationalsAreStrings) {
  EXPECT_EQ(EncodeRational(Q(-3, 6)), Json("-1/2"));
  EXPECT_EQ(DecodeRational(Json("4/6")), Q(2, 3));
  EXPECT_THROW(DecodeRational(Json(3)), ParseError);
  EXPECT_THROW(DecodeRational(Json(0.5)), ParseError);
  EXPECT_THROW(DecodeRational(Json("x")), ParseError);
}

TEST(Serialize, MagnitudeFields) {
  const Json j = EncodeMagnitude(Norm(Vec({Q(1), Q(1)}), NormKind::kL2));
  EXPECT_EQ(j["squared"], "2/1");
  EXPECT_TRUE(j["value"].is_null());
  EXPECT_EQ(j["approx"], "1.41421356237");
  EXPECT_EQ(EncodeMagnitude(Magnitude::FromValue(Q(3, 2)))["value"], "3/2");
  EXPECT_EQ(DecodeMagnitude(j).squared(), Q(2));
}

TEST(Serialize, IndicesAreOneBased) {
  EXPECT_EQ(EncodeIndices({2, 0, 1}), Json::parse("[3,1,2]"));
  EXPECT_EQ(DecodeIndices(Json::parse("[3,1,2]")), (std::vector<int>{2, 0, 1}));
  EXPECT_THROW(DecodeIndices(Json::parse("[0]")), ParseError);
}

TEST(Serialize, InstanceRoundTrips) {
  const char* docs[] = {
      R"({"kind":"discrete","values":[["1/2","1"],["-1/2","-1"]]})",
      R"({"kind":"step","breakpoints":["0","1/3","1"],"values":[["1"],["-1/2"]]})",
      R"({"kind":"cantor","q":2,"r":"1","depth":1,"values":[["1"],["-1"],["2"],["-2"]]})",
      R"({"kind":"matrix","rows":[[["1"],["-1"]],[["0"],["0"]]]})",
      R"({"kind":"vectors","vectors":[["1","0"],["-1","0"]]})",
      R"({"kind":"sets","sets":[[["1"],["-1"]]]})",
      R"({"kind":"diophantine","x":["1/3"],"v":["1"]})",
  };
  for (const char* text : docs) {
    const Json j = ParseDocument(text);
    const Instance inst = DecodeInstance(j);
    const Json again = EncodeInstance(inst);
    EXPECT_EQ(DumpDocument(again), DumpDocument(EncodeInstance(DecodeInstance(again))))
        << text;
    EXPECT_EQ(again["kind"], j["kind"]);
  }
}

TEST(Serialize, ExchangeRoundTrip) {
  const IntervalExchange T =
      IntervalExchange::FromCellPermutation(std::vector<int>{2, 0, 1});
  const IntervalExchange back = DecodeExchange(EncodeExchange(T));
  ASSERT_EQ(back.pieces().size(), T.pieces().size());
  for (std::size_t i = 0; i < T.pieces().size(); ++i) {
    EXPECT_EQ(back.pieces()[i], T.pieces()[i]);
  }
}

TEST(Serialize, MalformedDocuments) {
  EXPECT_THROW(ParseDocument("{"), ParseError);
  EXPECT_THROW(DecodeInstance(ParseDocument(R"({"kind":"nope"})")), ParseError);
  EXPECT_THROW(DecodeInstance(ParseDocument(R"({"kind":"discrete"})")), ParseError);
  EXPECT_THROW(DecodeInstance(ParseDocument(R"({"values":[["1"]]})")), ParseError);
  EXPECT_THROW(
      DecodeInstance(ParseDocument(R"({"kind":"discrete","values":[["1"],["1","2"]]})")),
      Error);
}

TEST(Serialize, DumpIsStable) {
  const Json j = ParseDocument(R"({"b":1,"a":[1,2]})");
  EXPECT_EQ(DumpDocument(j), "{\n  \"b\": 1,\n  \"a\": [\n    1,\n    2\n  ]\n}\n");
}

}  // namespace
}  // namespace cobound
