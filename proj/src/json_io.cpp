#include "threedist/json_io.hpp"

#include <string>

#include "threedist/errors.hpp"

namespace threedist::json {

namespace {

constexpr int kDisplayPlaces = 6;

template <typename T>
T field(const Json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  try {
    return object.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad field '") + key + "': " + e.what());
  }
}

Rational rational_field(const Json& object, const char* key) {
  return parse_rational(Json(field<std::string>(object, key)));
}

void expect_equal(const Rational& stored, const Rational& recomputed, const char* key) {
  if (stored != recomputed) {
    throw ParseError(std::string("field '") + key + "' is inconsistent: stored " +
                     stored.to_string() + ", recomputed " + recomputed.to_string());
  }
}

}  // namespace

Json rational(const Rational& value) { return value.to_string(); }

Rational parse_rational(const Json& value) {
  if (!value.is_string()) throw ParseError("rational must be a \"p/q\" string");
  return Rational::parse(value.get<std::string>());
}

Json real_value(const RealValue& value) {
  Json out;
  out["approx"] = rational(value.approx());
  out["err"] = rational(value.err());
  out["origin"] = std::string(origin_name(value.origin()));
  if (value.origin() == Origin::kNamedConstant) {
    out["constant"] = value.constant();
    out["bits"] = value.bits();
  }
  out["display"] = value.approx().to_fixed(kDisplayPlaces);
  return out;
}

RealValue parse_real_value(const Json& value) {
  const auto origin_text = field<std::string>(value, "origin");
  Origin origin;
  if (origin_text == origin_name(Origin::kExactRational)) {
    origin = Origin::kExactRational;
  } else if (origin_text == origin_name(Origin::kDecimalLiteral)) {
    origin = Origin::kDecimalLiteral;
  } else if (origin_text == origin_name(Origin::kNamedConstant)) {
    origin = Origin::kNamedConstant;
  } else {
    throw ParseError("unknown origin '" + origin_text + "'");
  }
  std::string constant;
  int bits = 0;
  if (origin == Origin::kNamedConstant) {
    constant = field<std::string>(value, "constant");
    bits = field<int>(value, "bits");
  }
  return RealValue::from_parts(rational_field(value, "approx"), rational_field(value, "err"),
                               origin, std::move(constant), bits);
}

Json farey_pair(const FareyPair& pair) {
  return Json{{"a", pair.a()}, {"b", pair.b()}, {"c", pair.c()}, {"d", pair.d()}};
}

FareyPair parse_farey_pair(const Json& value, std::int64_t order) {
  return FareyPair(field<std::int64_t>(value, "a"), field<std::int64_t>(value, "b"),
                   field<std::int64_t>(value, "c"), field<std::int64_t>(value, "d"), order);
}

Json partition(const DistancePartition& partition) {
  Json out;
  if (const auto* uniform = std::get_if<UniformPartition>(&partition)) {
    out["case"] = "uniform";
    out["n"] = uniform->n;
    out["alpha"] = rational(uniform->alpha);
    out["q"] = uniform->q();
    out["length"] = rational(uniform->length());
    out["length_display"] = uniform->length().to_fixed(kDisplayPlaces);
    return out;
  }
  const auto& general = std::get<GeneralPartition>(partition);
  out["case"] = "general";
  out["n"] = general.n();
  out["alpha"] = real_value(general.alpha());
  out["pair"] = farey_pair(general.pair());
  out["s"] = rational(general.s());
  out["t"] = rational(general.t());
  out["s_display"] = general.s().to_fixed(kDisplayPlaces);
  out["t_display"] = general.t().to_fixed(kDisplayPlaces);
  out["counts"] = Json::array({general.count_s(), general.count_t(), general.count_st()});
  out["length_err"] = rational(general.length_err());
  return out;
}

DistancePartition parse_partition(const Json& value) {
  const auto kind = field<std::string>(value, "case");
  const auto n = field<std::int64_t>(value, "n");
  if (kind == "uniform") {
    UniformPartition uniform{rational_field(value, "alpha"), n};
    if (uniform.alpha.den() > n || uniform.alpha <= Rational(0) || uniform.alpha >= Rational(1)) {
      throw ParseError("uniform partition requires alpha in F_n");
    }
    if (field<std::int64_t>(value, "q") != uniform.q()) throw ParseError("inconsistent q");
    expect_equal(rational_field(value, "length"), uniform.length(), "length");
    return uniform;
  }
  if (kind != "general") throw ParseError("unknown partition case '" + kind + "'");
  GeneralPartition general(parse_real_value(value.at("alpha")),
                           parse_farey_pair(value.at("pair"), n));
  expect_equal(rational_field(value, "s"), general.s(), "s");
  expect_equal(rational_field(value, "t"), general.t(), "t");
  const auto counts = field<std::vector<std::int64_t>>(value, "counts");
  if (counts != std::vector<std::int64_t>{general.count_s(), general.count_t(),
                                          general.count_st()}) {
    throw ParseError("inconsistent counts");
  }
  return general;
}

Json frequencies(const std::map<std::int64_t, Rational>& freqs) {
  Json out = Json::object();
  for (const auto& [gap, freq] : freqs) out[std::to_string(gap)] = rational(freq);
  return out;
}

namespace {

Json frequency_display(const std::map<std::int64_t, Rational>& freqs) {
  Json out = Json::object();
  for (const auto& [gap, freq] : freqs) out[std::to_string(gap)] = freq.to_fixed(kDisplayPlaces);
  return out;
}

}  // namespace

Json gap_structure(const GapStructure& structure) {
  Json out;
  const auto freqs = gap_frequencies(structure);
  if (const auto* wide = std::get_if<WideGaps>(&structure)) {
    out["case"] = "wide";
    out["alpha"] = real_value(wide->alpha);
    out["beta"] = rational(wide->beta);
  } else {
    const auto& narrow = std::get<NarrowGaps>(structure);
    out["case"] = "narrow";
    out["alpha"] = real_value(narrow.alpha);
    out["beta"] = rational(narrow.beta);
    out["b"] = narrow.b;
    out["d"] = narrow.d;
    out["s"] = rational(narrow.s);
    out["t"] = rational(narrow.t);
  }
  out["freqs"] = frequencies(freqs);
  out["freqs_display"] = frequency_display(freqs);
  return out;
}

GapStructure parse_gap_structure(const Json& value) {
  const auto kind = field<std::string>(value, "case");
  RealValue alpha = parse_real_value(value.at("alpha"));
  const Rational beta = rational_field(value, "beta");
  auto build = [&]() -> GapStructure {
    if (kind == "wide") {
      return WideGaps{alpha, beta, Rational(2) * beta - Rational(1), Rational(1) - beta};
    }
    if (kind != "narrow") throw ParseError("unknown gap structure case '" + kind + "'");
    NarrowGaps narrow{alpha, beta, field<std::int64_t>(value, "b"), field<std::int64_t>(value, "d"),
                      rational_field(value, "s"), rational_field(value, "t"), {}, {}, {}};
    narrow.freq_b = beta - narrow.s;
    narrow.freq_d = beta - narrow.t;
    narrow.freq_bd = narrow.s + narrow.t - beta;
    if (narrow.b < 1 || narrow.d < 1 || narrow.b == narrow.d) throw ParseError("bad b, d");
    return narrow;
  };
  GapStructure out = build();
  const Json& stored = value.at("freqs");
  for (const auto& [gap, freq] : gap_frequencies(out)) {
    const std::string key = std::to_string(gap);
    if (!stored.contains(key)) throw ParseError("missing frequency for gap " + key);
    expect_equal(parse_rational(stored.at(key)), freq, "freqs");
  }
  return out;
}

Json census(const LengthCensus& census) {
  Json out = Json::array();
  for (const auto& [length, count] : census.entries()) {
    out.push_back({{"length", rational(length)},
                   {"count", count},
                   {"display", length.to_fixed(kDisplayPlaces)}});
  }
  return out;
}

Json intervals(const std::vector<IntervalEntry>& entries) {
  Json out = Json::array();
  for (const auto& entry : entries) {
    out.push_back({{"index", entry.index},
                   {"class", std::string(length_class_name(entry.cls))},
                   {"length", rational(entry.length)}});
  }
  return out;
}

Json temperament(const TemperamentReport& report) {
  Json out;
  out["generator"] = real_value(report.generator);
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json lengths_3dp = Json::array();
    for (const auto& [length, count] : row.lengths.entries()) {
      lengths_3dp.push_back({{"length", length.to_fixed(3)}, {"count", count}});
    }
    rows.push_back({{"notes", row.notes},
                    {"two_length", row.two_length},
                    {"partition", partition(row.partition)},
                    {"lengths", census(row.lengths)},
                    {"lengths_3dp", std::move(lengths_3dp)},
                    {"ranks", row.ranks_in_position_order},
                    {"intervals", intervals(row.intervals)}});
  }
  out["rows"] = std::move(rows);
  Json conv = Json::array();
  for (const auto& den : report.convergent_denominators) conv.push_back(den.str());
  Json semi = Json::array();
  for (const auto& den : report.semiconvergent_denominators) semi.push_back(den.str());
  out["convergent_denominators"] = std::move(conv);
  out["semiconvergent_denominators"] = std::move(semi);
  return out;
}

}  // namespace threedist::json
