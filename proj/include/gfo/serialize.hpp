#pragma once

// JSON forms of the library's values.  Integers are JSON numbers when they
// fit in 64 bits and decimal strings otherwise; readers accept both.

#include <string>
#include <vector>

#include "json.hpp"

#include "gfo/oracle.hpp"
#include "gfo/ratfun.hpp"
#include "gfo/series.hpp"
#include "gfo/wilf.hpp"
#include "gfo/witness.hpp"

namespace gfo::json {

using nlohmann::json;

inline json integer(const BigInt& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

inline BigInt integer_from(const json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? BigInt(std::to_string(j.get<std::uint64_t>()))
                                  : BigInt(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw Error("malformed integer '" + j.get<std::string>() + "'");
    }
  }
  throw Error("expected an integer");
}

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing field '") + key + "'");
  return j.at(key);
}

// Polynomials: {"vars": [...], "text": "...", "terms": [{"exponents": [...], "coefficient": c}, ...]}
// with terms in ascending graded-lex order.
inline json to_json(const Poly& p, std::span<const std::string> names) {
  json terms = json::array();
  for (const auto& t : p.terms()) {
    json e = json::array();
    for (std::size_t v = 0; v < p.nvars(); ++v) e.push_back(t.mono.exp(v));
    terms.push_back({{"exponents", e}, {"coefficient", integer(t.coeff)}});
  }
  return {{"vars", std::vector<std::string>(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(p.nvars()))},
          {"text", p.str(names)},
          {"terms", terms}};
}
inline json to_json(const Poly& p) { return to_json(p, Poly::default_names(p.nvars())); }

inline Poly poly_from_json(const json& j) {
  const auto& vars = field(j, "vars");
  const std::size_t nvars = vars.size();
  std::vector<Poly::Term> terms;
  for (const auto& t : field(j, "terms")) {
    std::vector<std::uint32_t> e = field(t, "exponents").get<std::vector<std::uint32_t>>();
    if (e.size() != nvars) throw Error("exponent vector length does not match the variable count");
    terms.push_back({Monomial::from(e), integer_from(field(t, "coefficient"))});
  }
  Poly p = Poly::from_terms(nvars, std::move(terms));
  if (j.contains("text")) {
    const auto names = vars.get<std::vector<std::string>>();
    if (p.str(names) != j.at("text").get<std::string>()) throw Error("polynomial text disagrees with its terms");
  }
  return p;
}

// Rational functions: {"num": poly, "den": poly, "text": "..."}.
inline json to_json(const RatFun& f, std::span<const std::string> names) {
  return {{"num", to_json(f.num(), names)}, {"den", to_json(f.den(), names)}, {"text", f.str(names)}};
}
inline json to_json(const RatFun& f) { return to_json(f, Poly::default_names(f.nvars())); }

inline RatFun ratfun_from_json(const json& j) {
  return RatFun(poly_from_json(field(j, "num")), poly_from_json(field(j, "den")));
}

// Series prefixes: {"offset": k, "coefficients": [c_0, ..., c_K]}.
inline json to_json(const SeriesPrefix& s) {
  json c = json::array();
  for (const auto& v : s.coefficients) c.push_back(integer(v));
  return {{"offset", s.offset}, {"coefficients", c}};
}

inline SeriesPrefix series_from_json(const json& j) {
  std::vector<BigInt> c;
  for (const auto& v : field(j, "coefficients")) c.push_back(integer_from(v));
  SeriesPrefix s = SeriesPrefix::from(std::move(c));
  if (field(j, "offset").get<std::size_t>() != s.offset) throw Error("series offset disagrees with its coefficients");
  return s;
}

// Weight census: {"pattern", "bound", "weights": {"k": {"S", "FnotS", "A"}}}.
inline json to_json(const WeightCensus& c) {
  json weights = json::object();
  for (std::size_t k = 0; k < c.counts.size(); ++k) {
    const auto& t = c.counts[k];
    weights[std::to_string(k)] = {{"S", t.in_s}, {"FnotS", t.in_f_not_s}, {"A", t.in_a}};
  }
  return {{"pattern", c.pattern.str()}, {"bound", c.bound}, {"weights", weights}};
}

inline std::vector<WeightTally> weight_tallies_from_json(const json& j) {
  const unsigned bound = field(j, "bound").get<unsigned>();
  std::vector<WeightTally> out(bound + 1);
  for (unsigned k = 0; k <= bound; ++k) {
    const auto& w = field(field(j, "weights"), std::to_string(k).c_str());
    out[k] = {field(w, "S").get<std::uint64_t>(), field(w, "FnotS").get<std::uint64_t>(),
              field(w, "A").get<std::uint64_t>()};
  }
  return out;
}

// Content census: {"pattern", "m", "max_length", "contents": [{"content", "F", "S", "A"}]}.
inline json to_json(const ContentCensus& c) {
  json contents = json::array();
  for (const auto& [content, t] : c.counts) {
    contents.push_back({{"content", content}, {"F", t.in_f}, {"S", t.in_s}, {"A", t.in_a}});
  }
  return {{"pattern", c.pattern.str()}, {"m", c.m}, {"max_length", c.max_length}, {"contents", contents}};
}

inline ContentCensus content_census_from_json(const json& j) {
  ContentCensus c;
  c.pattern = Word::parse(field(j, "pattern").get<std::string>());
  c.m = field(j, "m").get<std::size_t>();
  c.max_length = field(j, "max_length").get<std::size_t>();
  for (const auto& e : field(j, "contents")) {
    auto content = field(e, "content").get<std::vector<std::uint32_t>>();
    if (content.size() != c.m) throw Error("content vector length does not match m");
    c.counts[content] = {field(e, "F").get<std::uint64_t>(), field(e, "S").get<std::uint64_t>(),
                         field(e, "A").get<std::uint64_t>()};
  }
  return c;
}

// Verdicts, one JSON line each: {"u", "v", "method", "result", "certificate"}
// plus "order" for series-bounded verdicts.
inline json to_json(const EquivalenceVerdict& v) {
  json j{{"u", v.u.str()},
         {"v", v.v.str()},
         {"method", method_tag(v.method)},
         {"result", to_string(v.result)},
         {"certificate", v.certificate}};
  if (v.method == Method::SeriesBounded) j["order"] = v.order;
  return j;
}

inline EquivalenceVerdict verdict_from_json(const json& j) {
  EquivalenceVerdict v;
  v.u = Word::parse(field(j, "u").get<std::string>());
  v.v = Word::parse(field(j, "v").get<std::string>());
  const auto method = field(j, "method").get<std::string>();
  if (method == "CLOSED_FORM") {
    v.method = Method::ClosedForm;
  } else if (method == "AUTOMATON_EXACT") {
    v.method = Method::AutomatonExact;
  } else if (method == "SERIES_BOUNDED") {
    v.method = Method::SeriesBounded;
  } else {
    throw Error("unknown method '" + method + "'");
  }
  const auto result = field(j, "result").get<std::string>();
  if (result == "EQUIVALENT") {
    v.result = Outcome::Equivalent;
  } else if (result == "NOT_EQUIVALENT") {
    v.result = Outcome::NotEquivalent;
  } else if (result == "INCONCLUSIVE") {
    v.result = Outcome::Inconclusive;
  } else {
    throw Error("unknown result '" + result + "'");
  }
  v.certificate = field(j, "certificate").get<std::string>();
  if (v.method == Method::SeriesBounded) {
    v.order = field(j, "order").get<unsigned>();
    if (v.result == Outcome::Equivalent) throw Error("a series-bounded verdict cannot be EQUIVALENT");
  } else if (v.result == Outcome::Inconclusive) {
    throw Error("an exact verdict cannot be INCONCLUSIVE");
  }
  return v;
}

inline constexpr const char* kWitnessSchema = "gfo-witness";

// Witness tables: {"schema", "version", "u", "v", "m", "max_length",
// "classes": [{"content", "side", "pairs": [[source, image], ...]}]}.
inline json to_json(const WitnessTable& t) {
  json classes = json::array();
  for (const auto& [key, pairs] : t.classes()) {
    json p = json::array();
    for (const auto& [src, dst] : pairs) p.push_back({src.str(), dst.str()});
    classes.push_back({{"content", key.content}, {"side", to_string(key.side)}, {"pairs", p}});
  }
  return {{"schema", kWitnessSchema},
          {"version", WitnessTable::kSchemaVersion},
          {"u", t.u().str()},
          {"v", t.v().str()},
          {"m", t.m()},
          {"max_length", t.max_length()},
          {"classes", classes}};
}

/// Reads a table back, checking the schema version and that every pair
/// stays inside its class and is a rearrangement.
inline WitnessTable witness_from_json(const json& j) {
  if (field(j, "schema").get<std::string>() != kWitnessSchema) throw Error("not a witness table");
  const int version = field(j, "version").get<int>();
  if (version != WitnessTable::kSchemaVersion) {
    throw Error("unsupported witness schema version " + std::to_string(version));
  }
  const Word u = Word::parse(field(j, "u").get<std::string>());
  const Word v = Word::parse(field(j, "v").get<std::string>());
  const std::size_t m = field(j, "m").get<std::size_t>();
  const std::size_t max_length = field(j, "max_length").get<std::size_t>();
  std::map<WitnessClassKey, std::vector<std::pair<Word, Word>>> classes;
  for (const auto& c : field(j, "classes")) {
    WitnessClassKey key;
    key.content = field(c, "content").get<std::vector<std::uint32_t>>();
    const auto side = field(c, "side").get<std::string>();
    if (side != "F" && side != "A") throw Error("unknown witness side '" + side + "'");
    key.side = side == "F" ? Side::F : Side::A;
    auto& pairs = classes[key];
    for (const auto& p : field(c, "pairs")) {
      if (!p.is_array() || p.size() != 2) throw Error("witness pair must hold two words");
      Word src = p[0].get<std::string>().empty() ? Word() : Word::parse(p[0].get<std::string>());
      Word dst = p[1].get<std::string>().empty() ? Word() : Word::parse(p[1].get<std::string>());
      if (content_of(src, m) != key.content || content_of(dst, m) != key.content) {
        throw Error("witness pair " + src.str() + " -> " + dst.str() + " leaves its content class");
      }
      pairs.emplace_back(std::move(src), std::move(dst));
    }
  }
  return WitnessTable(u, v, m, max_length, std::move(classes));
}

}  // namespace gfo::json
