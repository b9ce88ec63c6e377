#include "cobound/serialize.h"

#include <type_traits>
#include <utility>

#include "cobound/errors.h"

namespace cobound {

namespace {

const Json& Field(const Json& j, const char* name) {
  if (!j.is_object()) throw ParseError("expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

const Json& Array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  return j;
}

int Integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw ParseError(std::string(what) + " must be an integer");
  }
  return j.get<int>();
}

template <typename T, typename F>
std::vector<T> DecodeList(const Json& j, const char* what, F decode) {
  std::vector<T> out;
  for (const auto& e : Array(j, what)) out.push_back(decode(e));
  return out;
}

std::vector<std::vector<RationalVector>> DecodeNested(const Json& j,
                                                      const char* what) {
  return DecodeList<std::vector<RationalVector>>(
      j, what, [](const Json& e) { return DecodeVectors(e); });
}

Json EncodeNested(const std::vector<std::vector<RationalVector>>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(EncodeVectors(s));
  return out;
}

}  // namespace

Json ParseDocument(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

std::string DumpDocument(const Json& doc) { return doc.dump(2) + "\n"; }

Json EncodeRational(const Rational& r) { return r.str(); }

Rational DecodeRational(const Json& j) {
  if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string");
  return Rational::Parse(j.get<std::string>());
}

Json EncodeVector(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v.entries()) out.push_back(EncodeRational(x));
  return out;
}

RationalVector DecodeVector(const Json& j) {
  auto entries = DecodeList<Rational>(j, "vector", DecodeRational);
  if (entries.empty()) throw ParseError("vector must have at least one entry");
  return RationalVector(std::move(entries));
}

Json EncodeVectors(const std::vector<RationalVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(EncodeVector(v));
  return out;
}

std::vector<RationalVector> DecodeVectors(const Json& j) {
  return DecodeList<RationalVector>(j, "vector list", DecodeVector);
}

Json EncodeMagnitude(const Magnitude& m) {
  Json out;
  out["squared"] = EncodeRational(m.squared());
  const auto exact = m.exact();
  out["value"] = exact ? EncodeRational(*exact) : Json(nullptr);
  out["approx"] = FormatDecimal(m.approx());
  return out;
}

Magnitude DecodeMagnitude(const Json& j) {
  Rational sq = DecodeRational(Field(j, "squared"));
  if (sq.sign() < 0) throw ParseError("squared magnitude is negative");
  return Magnitude::FromSquare(std::move(sq));
}

Json EncodeStep(const StepFunction& f) {
  Json out;
  Json bps = Json::array();
  for (const auto& b : f.breakpoints()) bps.push_back(EncodeRational(b));
  out["breakpoints"] = std::move(bps);
  out["values"] = EncodeVectors({f.values().begin(), f.values().end()});
  return out;
}

StepFunction DecodeStep(const Json& j) {
  return StepFunction(
      DecodeList<Rational>(Field(j, "breakpoints"), "breakpoints",
                           DecodeRational),
      DecodeVectors(Field(j, "values")));
}

Json EncodeExchange(const IntervalExchange& T) {
  Json pieces = Json::array();
  for (const auto& p : T.pieces()) {
    Json piece;
    piece["lo"] = EncodeRational(p.lo);
    piece["hi"] = EncodeRational(p.hi);
    piece["shift"] = EncodeRational(p.shift);
    pieces.push_back(std::move(piece));
  }
  Json out;
  out["pieces"] = std::move(pieces);
  return out;
}

IntervalExchange DecodeExchange(const Json& j) {
  return IntervalExchange(DecodeList<ExchangePiece>(
      Field(j, "pieces"), "pieces", [](const Json& p) {
        return ExchangePiece{DecodeRational(Field(p, "lo")),
                             DecodeRational(Field(p, "hi")),
                             DecodeRational(Field(p, "shift"))};
      }));
}

Json EncodeCantor(const CantorStep& f) {
  Json out;
  out["q"] = f.q;
  out["r"] = EncodeRational(f.r);
  out["depth"] = f.depth;
  out["values"] = EncodeVectors(f.values);
  return out;
}

CantorStep DecodeCantor(const Json& j) {
  CantorStep f;
  f.q = Integer(Field(j, "q"), "q");
  f.r = DecodeRational(Field(j, "r"));
  f.depth = Integer(Field(j, "depth"), "depth");
  f.values = DecodeVectors(Field(j, "values"));
  f.Validate();
  return f;
}

Json EncodeIndices(const std::vector<int>& indices) {
  Json out = Json::array();
  for (int i : indices) out.push_back(i + 1);
  return out;
}

std::vector<int> DecodeIndices(const Json& j) {
  return DecodeList<int>(j, "index list", [](const Json& e) {
    const int i = Integer(e, "index");
    if (i < 1) throw ParseError("indices are 1-based");
    return i - 1;
  });
}

Instance DecodeInstance(const Json& j) {
  const Json& kind_field = Field(j, "kind");
  if (!kind_field.is_string()) throw ParseError("\"kind\" must be a string");
  Instance inst;
  inst.kind = kind_field.get<std::string>();
  if (inst.kind == "discrete") {
    DiscreteFunction f{DecodeVectors(Field(j, "values"))};
    f.Validate();
    inst.data = std::move(f);
  } else if (inst.kind == "step") {
    inst.data = DecodeStep(j);
  } else if (inst.kind == "cantor") {
    inst.data = DecodeCantor(j);
  } else if (inst.kind == "matrix") {
    inst.data = MatrixRows{DecodeNested(Field(j, "rows"), "rows")};
  } else if (inst.kind == "vectors") {
    inst.data = DecodeVectors(Field(j, "vectors"));
  } else if (inst.kind == "sets") {
    inst.data = VectorSets{DecodeNested(Field(j, "sets"), "sets")};
  } else if (inst.kind == "diophantine") {
    inst.data = DiophantineInstance{
        DecodeList<Rational>(Field(j, "x"), "x", DecodeRational),
        DecodeVector(Field(j, "v"))};
  } else {
    throw ParseError("unknown instance kind \"" + inst.kind + "\"");
  }
  return inst;
}

Json EncodeInstance(const Instance& instance) {
  Json out;
  out["kind"] = instance.kind;
  std::visit(
      [&](const auto& data) {
        using T = std::decay_t<decltype(data)>;
        if constexpr (std::is_same_v<T, DiscreteFunction>) {
          out["values"] = EncodeVectors(data.values);
        } else if constexpr (std::is_same_v<T, StepFunction>) {
          const Json step = EncodeStep(data);
          for (const auto& [k, v] : step.items()) out[k] = v;
        } else if constexpr (std::is_same_v<T, CantorStep>) {
          const Json cantor = EncodeCantor(data);
          for (const auto& [k, v] : cantor.items()) out[k] = v;
        } else if constexpr (std::is_same_v<T, std::vector<RationalVector>>) {
          out["vectors"] = EncodeVectors(data);
        } else if constexpr (std::is_same_v<T, DiophantineInstance>) {
          Json x = Json::array();
          for (const auto& r : data.x) x.push_back(EncodeRational(r));
          out["x"] = std::move(x);
          out["v"] = EncodeVector(data.v);
        } else if constexpr (std::is_same_v<T, MatrixRows>) {
          out["rows"] = EncodeNested(data.rows);
        } else {
          out["sets"] = EncodeNested(data.sets);
        }
      },
      instance.data);
  return out;
}

}  // namespace cobound
