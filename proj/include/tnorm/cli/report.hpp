#pragma once

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "tnorm/thurston_norm.hpp"

namespace tnorm::cli {

/// Ordered `key = value` lines.
class ReportText {
 public:
  void add(std::string key, std::string value) { lines_.emplace_back(std::move(key), std::move(value)); }

  const std::vector<std::pair<std::string, std::string>>& lines() const noexcept { return lines_; }

  bool has(const std::string& key) const {
    for (const auto& [k, v] : lines_)
      if (k == key) return true;
    return false;
  }

  std::string str() const {
    std::string out;
    for (const auto& [k, v] : lines_) out += k + " = " + v + "\n";
    return out;
  }

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

/// 12 significant digits, as printf's %.12g.
inline std::string format_float(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline std::string format_floats(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += format_float(v[i]);
  }
  return out + "]";
}

inline std::string format_longs(const std::vector<long>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + "]";
}

inline std::string format_sizes(const std::vector<std::size_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + "]";
}

inline void write_report(ReportText& out, const NormReport& r) {
  out.add("genus", std::to_string(r.genus));
  out.add("singularities", format_longs(r.singularities.prongs));
  out.add("rank", std::to_string(r.rank));
  out.add("charpoly", format_list(r.charpoly.coeffs()));
  out.add("trace_functional", format_list(r.functional.t));
  out.add("class", format_list(r.fiber_class.z));
  out.add("norm_at_fiber", r.norm_at_fiber.get_str());
  out.add("thurston_fiber_target", std::to_string(r.thurston_fiber_target));
  out.add("discrepancy", r.discrepancy.get_str());
  if (r.gromov_value) out.add("gromov_value", r.gromov_value->get_str());
  out.add("dual_euler_value", std::to_string(r.dual_euler_value));
  if (r.negative_fiber_norm) out.add("negative_fiber_norm", "true");
}

inline std::string write_report(const NormReport& r) {
  ReportText out;
  write_report(out, r);
  return out.str();
}

}  // namespace tnorm::cli
