#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "cobound/cantor.h"
#include "cobound/interval_exchange.h"
#include "cobound/norm.h"
#include "cobound/rational.h"
#include "cobound/step_function.h"
#include "cobound/vector.h"

namespace cobound {

using Json = nlohmann::ordered_json;

// Parses a document; syntax errors become ParseError.
Json ParseDocument(std::string_view text);
// Two-space indented, trailing newline.
std::string DumpDocument(const Json& doc);

// Every decoder throws ParseError on a missing field or wrong type.
Json EncodeRational(const Rational& r);
Rational DecodeRational(const Json& j);

Json EncodeVector(const RationalVector& v);
RationalVector DecodeVector(const Json& j);
Json EncodeVectors(const std::vector<RationalVector>& vs);
std::vector<RationalVector> DecodeVectors(const Json& j);

// {"squared": "p/q", "value": "p/q" or null, "approx": "..."}.
Json EncodeMagnitude(const Magnitude& m);
Magnitude DecodeMagnitude(const Json& j);

// {"breakpoints": [...], "values": [[...], ...]}.
Json EncodeStep(const StepFunction& f);
StepFunction DecodeStep(const Json& j);

// {"pieces": [{"lo", "hi", "shift"}, ...]}.
Json EncodeExchange(const IntervalExchange& T);
IntervalExchange DecodeExchange(const Json& j);

// {"q", "r", "depth", "values"}.
Json EncodeCantor(const CantorStep& f);
CantorStep DecodeCantor(const Json& j);

// 0-based in memory, 1-based in documents.
Json EncodeIndices(const std::vector<int>& indices);
std::vector<int> DecodeIndices(const Json& j);

struct DiophantineInstance {
  std::vector<Rational> x;
  RationalVector v;
};

struct MatrixRows {
  std::vector<std::vector<RationalVector>> rows;
};

struct VectorSets {
  std::vector<std::vector<RationalVector>> sets;
};

// An input document, tagged by its "kind" field:
//   discrete    {"values"}
//   step        {"breakpoints", "values"}
//   cantor      {"q", "r", "depth", "values"}
//   matrix      {"rows": [[vector, ...], ...]}
//   vectors     {"vectors"}
//   sets        {"sets": [[vector, ...], ...]}
//   diophantine {"x", "v"}
struct Instance {
  std::string kind;
  std::variant<DiscreteFunction, StepFunction, CantorStep, MatrixRows,
               std::vector<RationalVector>, VectorSets, DiophantineInstance>
      data;
};

Instance DecodeInstance(const Json& j);
Json EncodeInstance(const Instance& instance);

}  // namespace cobound
