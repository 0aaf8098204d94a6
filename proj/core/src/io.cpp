#include "teichdisk/io.hpp"

#include "teichdisk/errors.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <limits>
#include <sstream>

namespace teichdisk::io {
namespace {

using nlohmann::json;

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& ex) {
    throw InvalidInput(std::string("malformed JSON: ") + ex.what());
  }
}

json integer_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

BigInt integer_from(const json& v) {
  if (v.is_number_integer()) return BigInt(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return BigInt(v.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw InvalidInput("expected an integer, got " + v.dump());
}

json scalar_json(const Scalar& s) {
  if (!s.exact()) return s.to_double();
  const Rational& r = s.rational();
  if (denominator(r) == 1) return integer_json(numerator(r));
  return s.to_string();
}

Scalar scalar_from(const json& v) {
  if (v.is_number_integer()) return Scalar(v.get<std::int64_t>());
  if (v.is_number_float()) return Scalar(v.get<double>());
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  throw InvalidInput("expected a number, got " + v.dump());
}

// [numerator, denominator] pair; doubles carry denominator 1
json pair_json(const Scalar& s) {
  if (!s.exact()) return json::array({s.to_double(), 1});
  return json::array({integer_json(numerator(s.rational())), integer_json(denominator(s.rational()))});
}

Scalar pair_from(const json& num, const json& den) {
  if (num.is_number_float() || den.is_number_float()) {
    return Scalar(num.get<double>()) / Scalar(den.get<double>());
  }
  BigInt d = integer_from(den);
  if (d == 0) throw InvalidInput("zero denominator in edge coordinate");
  return Scalar(Rational(integer_from(num), d));
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  return obj.at(key);
}

json iet_json(const js::IntervalExchange& iet) {
  json lengths = json::array();
  for (const auto& l : iet.lengths) lengths.push_back(scalar_json(l));
  json flips = json::array();
  for (bool f : iet.flips) flips.push_back(f);
  return {{"lengths", lengths}, {"perm", iet.permutation}, {"flips", flips}};
}

js::IntervalExchange iet_from(const json& v) {
  js::IntervalExchange iet;
  for (const auto& l : field(v, "lengths")) iet.lengths.push_back(scalar_from(l));
  for (const auto& p : field(v, "perm")) {
    if (!p.is_number_integer() || p.get<std::int64_t>() < 0) throw InvalidInput("perm entries must be non-negative integers");
    iet.permutation.push_back(p.get<std::size_t>());
  }
  if (v.contains("flips")) {
    for (const auto& f : v.at("flips")) iet.flips.push_back(f.get<bool>());
  } else {
    iet.flips.assign(iet.lengths.size(), false);
  }
  iet.validate();
  return iet;
}

json number(double v) {
  if (!std::isfinite(v)) return v > 0 ? json("inf") : json(nullptr);
  return v;
}

void csv_number(std::ostringstream& os, double v) { os << format_double(v); }

}  // namespace

std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string surface_to_json(const flat::PlanarPolygonSurface& f) {
  json edges = json::array();
  for (const auto& e : f.edges()) {
    json px = pair_json(e.x);
    json py = pair_json(e.y);
    edges.push_back(json::array({px[0], px[1], py[0], py[1]}));
  }
  json kinds = json::array();
  for (auto k : f.kinds()) kinds.push_back(k == flat::PairingKind::kTranslation ? "T" : "S");
  return json{{"edges", edges}, {"pairing", f.pairing()}, {"kind", kinds}}.dump();
}

flat::PlanarPolygonSurface surface_from_json(const std::string& text) {
  const json v = parse(text);
  std::vector<Vec2> edges;
  for (const auto& e : field(v, "edges")) {
    if (!e.is_array() || e.size() != 4) throw InvalidInput("edge must be [px, qx, py, qy]");
    edges.push_back({pair_from(e[0], e[1]), pair_from(e[2], e[3])});
  }
  std::vector<std::size_t> pairing;
  for (const auto& p : field(v, "pairing")) {
    if (!p.is_number_integer() || p.get<std::int64_t>() < 0) throw InvalidInput("pairing entries must be indices");
    pairing.push_back(p.get<std::size_t>());
  }
  std::vector<flat::PairingKind> kinds;
  if (v.contains("kind")) {
    for (const auto& k : v.at("kind")) {
      const std::string s = k.get<std::string>();
      if (s == "T") {
        kinds.push_back(flat::PairingKind::kTranslation);
      } else if (s == "S") {
        kinds.push_back(flat::PairingKind::kSemiTranslation);
      } else {
        throw InvalidInput("pairing kind must be \"T\" or \"S\"");
      }
    }
  } else {
    kinds.assign(edges.size(), flat::PairingKind::kTranslation);
  }
  return flat::PlanarPolygonSurface(std::move(edges), std::move(pairing), std::move(kinds));
}

std::string js_to_json(const js::JSNormalForm& j) {
  return json{{"c", scalar_json(j.circumference())},
              {"h", scalar_json(j.height())},
              {"offset", scalar_json(j.offset())},
              {"iet", iet_json(j.iet())},
              {"winding", j.winding()}}
      .dump();
}

js::JSNormalForm js_from_json(const std::string& text) {
  const json v = parse(text);
  std::int64_t winding = v.contains("winding") ? v.at("winding").get<std::int64_t>() : 0;
  Scalar offset = v.contains("offset") ? scalar_from(v.at("offset")) : Scalar(0);
  return js::js_build(scalar_from(field(v, "c")), scalar_from(field(v, "h")), iet_from(field(v, "iet")), offset,
                      winding);
}

std::string fixture_to_json(const plumbing::PlumbingFixture& fx) {
  json charts = json::array();
  for (const auto& chart : fx.charts) {
    if (chart.strebel) {
      charts.push_back({{"kind", "strebel"}});
    } else {
      charts.push_back({{"kind", "general"}, {"family", chart.map.family()}, {"param", chart.map.param()}});
    }
  }
  return json{{"c", scalar_json(fx.model.c)},
              {"iet", iet_json(fx.model.iet)},
              {"truncation_depth", fx.model.truncation_depth},
              {"charts", charts}}
      .dump();
}

plumbing::PlumbingFixture fixture_from_json(const std::string& text) {
  const json v = parse(text);
  plumbing::PlumbingFixture fx;
  fx.model.c = scalar_from(field(v, "c"));
  fx.model.iet = iet_from(field(v, "iet"));
  if (!(fx.model.iet.total_length() == fx.model.c)) throw InvalidInput("fixture interval lengths do not sum to c");
  fx.model.truncation_depth = v.contains("truncation_depth") ? v.at("truncation_depth").get<double>() : 8.0;
  const json& charts = field(v, "charts");
  if (!charts.is_array() || charts.size() != 2) throw InvalidInput("fixture needs exactly two charts");
  for (std::size_t k = 0; k < 2; ++k) {
    const std::string kind = field(charts[k], "kind").get<std::string>();
    if (kind == "strebel") {
      fx.charts[k] = plumbing::EndChart::strebel_chart();
    } else if (kind == "general") {
      const double param = charts[k].contains("param") ? charts[k].at("param").get<double>() : 0.0;
      fx.charts[k] = plumbing::EndChart::general(
          qc::UnivalentEndMap::from_family(field(charts[k], "family").get<std::string>(), param));
    } else {
      throw InvalidInput("chart kind must be \"strebel\" or \"general\"");
    }
  }
  return fx;
}

std::string certificate_to_json(const asymptotics::Theorem1Certificate& c) {
  return json{{"L0", number(c.L0)},
              {"r", number(c.r)},
              {"e", json::array({number(c.e[0]), number(c.e[1])})},
              {"N", c.N},
              {"H", number(c.H)},
              {"K_total", number(c.K_total)},
              {"bound", number(c.bound)}}
      .dump();
}

std::string torus_csv(const std::vector<asymptotics::TorusRow>& rows) {
  std::ostringstream os;
  os << "s,d\n";
  for (const auto& row : rows) {
    csv_number(os, row.s);
    os << ',';
    csv_number(os, row.measured);
    os << '\n';
  }
  return os.str();
}

std::string plumbing_certificate_csv(const plumbing::Theorem2Certificate& c) {
  std::ostringstream os;
  os << "im_z,collar_K,stretch_K,total_bound\n";
  for (const auto& row : c.rows) {
    csv_number(os, row.im_z);
    os << ',';
    csv_number(os, row.collar_K);
    os << ',';
    csv_number(os, row.stretch_K);
    os << ',';
    csv_number(os, row.total_bound);
    os << '\n';
  }
  return os.str();
}

std::string beltrami_csv(const qc::BeltramiField& b) {
  std::ostringstream os;
  os << "# spacing=" << format_double(b.spacing) << '\n' << "re,im,value\n";
  for (std::size_t k = 0; k < b.nodes.size(); ++k) {
    csv_number(os, b.nodes[k].real());
    os << ',';
    csv_number(os, b.nodes[k].imag());
    os << ',';
    csv_number(os, std::abs(b.mu[k]));
    os << '\n';
  }
  return os.str();
}

std::string grid_csv(const qc::GridMap& m) {
  std::ostringstream os;
  os << "# spacing=" << format_double(m.spacing) << '\n' << "re,im,value\n";
  for (std::size_t j = 0; j < m.ny; ++j) {
    for (std::size_t i = 0; i < m.nx; ++i) {
      if (!m.mask[m.index(i, j)]) continue;
      const auto z = m.node(i, j);
      csv_number(os, z.real());
      os << ',';
      csv_number(os, z.imag());
      os << ',';
      csv_number(os, std::abs(m.samples[m.index(i, j)]));
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace teichdisk::io
