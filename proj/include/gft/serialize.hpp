// Deterministic JSON emission (17 significant digits, fixed key order) and
// the series file format.
#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gft/grid.hpp"
#include "gft/power_series.hpp"

namespace gft {

inline std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline std::string complex_to_json(cplx z) {
  return "[" + fmt17(z.real()) + "," + fmt17(z.imag()) + "]";
}

// {"order": N, "coeffs": [[re, im], ...]} with exactly N+1 coefficient pairs.
inline std::string series_to_json(const PowerSeries& s) {
  std::string out = "{\"order\":" + std::to_string(s.order()) + ",\"coeffs\":[";
  for (std::size_t k = 0; k <= s.order(); ++k) {
    if (k) out += ",";
    out += complex_to_json(s[k]);
  }
  out += "]}";
  return out;
}

inline PowerSeries series_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument("series: malformed JSON");
  }
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs") ||
      !j["order"].is_number_unsigned() || !j["coeffs"].is_array())
    throw std::invalid_argument("series: expected {\"order\": N, \"coeffs\": [[re, im], ...]}");
  const std::size_t order = j["order"].get<std::size_t>();
  const auto& coeffs = j["coeffs"];
  if (coeffs.size() != order + 1)
    throw std::invalid_argument("series: coefficient count must be order + 1");
  PowerSeries s(order);
  for (std::size_t k = 0; k <= order; ++k) {
    const auto& pair = coeffs[k];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw std::invalid_argument("series: each coefficient must be [re, im]");
    s.at(k) = cplx{pair[0].get<double>(), pair[1].get<double>()};
  }
  return s;
}

inline std::string grid_to_json(const GridSpec& grid) {
  std::string out = "{\"radii\":[";
  for (std::size_t i = 0; i < grid.radii.size(); ++i) {
    if (i) out += ",";
    out += fmt17(grid.radii[i]);
  }
  out += "],\"angular_samples\":" + std::to_string(grid.angular_samples);
  out += ",\"boundary_margin\":" + fmt17(grid.boundary_margin) + "}";
  return out;
}

inline std::string verdict_to_json(const Verdict& v, const GridSpec& grid) {
  std::string out = "{\"status\":\"";
  out += v.holds() ? "HoldsOnGrid" : "ViolatedAt";
  out += "\"";
  if (v.witness) {
    out += ",\"witness_z\":" + complex_to_json(v.witness->z);
    out += ",\"witness_value\":" + complex_to_json(v.witness->value);
    out += ",\"reason\":\"" + v.witness->reason + "\"";
  }
  out += ",\"grid\":" + grid_to_json(grid);
  out += ",\"stat_min\":" + fmt17(v.stat_min);
  out += ",\"stat_max\":" + fmt17(v.stat_max);
  out += ",\"points\":" + std::to_string(v.points) + "}";
  return out;
}

}  // namespace gft
