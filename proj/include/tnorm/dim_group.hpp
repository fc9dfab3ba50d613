#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>

#include "tnorm/perron.hpp"

namespace tnorm {

/// (v, n): the image of v in the n-th copy of Z^k. (v, n) ~ (A v, n + 1).
/// Elements are not normalized; comparisons telescope to a common stage.
struct DimGroupElement {
  IntVector v;
  std::size_t stage = 0;
};

/// The inductive limit Z^k -A-> Z^k -A-> ... of a primitive nonnegative matrix.
class StationaryDimGroup {
 public:
  explicit StationaryDimGroup(IntMatrix a) : a_(std::move(a)), perron_(perron_data(a_)) {}

  const IntMatrix& matrix() const noexcept { return a_; }
  std::size_t dimension() const noexcept { return a_.size(); }
  std::size_t primitivity_witness() const noexcept { return perron_.primitivity_witness; }
  const PerronData& perron() const noexcept { return perron_; }

  void check(const DimGroupElement& e) const {
    require(e.v.size() == dimension(), ErrorCode::DimensionMismatch,
            "element of length " + std::to_string(e.v.size()) + " in a rank " + std::to_string(dimension()) +
                " group");
  }

 private:
  IntMatrix a_;
  PerronData perron_;
};

inline StationaryDimGroup make_dim_group(const IntMatrix& a) { return StationaryDimGroup(a); }

inline DimGroupElement telescope(const StationaryDimGroup& g, const DimGroupElement& e, std::size_t stage) {
  g.check(e);
  if (stage < e.stage)
    throw Error(ErrorCode::BackwardTelescope,
                "cannot move from stage " + std::to_string(e.stage) + " back to " + std::to_string(stage));
  IntVector v = e.v;
  for (std::size_t s = e.stage; s < stage; ++s) v = g.matrix().apply(v);
  return {std::move(v), stage};
}

inline DimGroupElement add(const StationaryDimGroup& g, const DimGroupElement& a, const DimGroupElement& b) {
  const std::size_t stage = std::max(a.stage, b.stage);
  return {tnorm::add(telescope(g, a, stage).v, telescope(g, b, stage).v), stage};
}

inline DimGroupElement subtract(const StationaryDimGroup& g, const DimGroupElement& a, const DimGroupElement& b) {
  const std::size_t stage = std::max(a.stage, b.stage);
  return {tnorm::subtract(telescope(g, a, stage).v, telescope(g, b, stage).v), stage};
}

inline DimGroupElement scale(const Integer& c, const DimGroupElement& e) { return {tnorm::scale(c, e.v), e.stage}; }

/// Equality in the limit group. A kernel vector of A^j dies after at most k
/// further steps, so comparing k stages past the common one is exact.
inline bool equivalent(const StationaryDimGroup& g, const DimGroupElement& a, const DimGroupElement& b) {
  const std::size_t stage = std::max(a.stage, b.stage) + g.dimension();
  return telescope(g, a, stage).v == telescope(g, b, stage).v;
}

inline PositivitySign is_positive(const StationaryDimGroup& g, const DimGroupElement& e) {
  g.check(e);
  return eventual_positivity(g.matrix(), g.perron(), e.v);
}

/// Class of the unit, represented by the all-ones vector at stage 0.
inline DimGroupElement order_unit(const StationaryDimGroup& g) { return {IntVector(g.dimension(), Integer(1)), 0}; }

/// DOT rendering of `levels` floors of the stationary Bratteli diagram: A(i, j)
/// parallel edges from vertex j on floor t to vertex i on floor t + 1.
inline std::string bratteli_dot(const StationaryDimGroup& g, std::size_t levels) {
  if (levels < 2) throw Error(ErrorCode::TooFewLevels, "a diagram needs at least 2 levels, got " + std::to_string(levels));
  const IntMatrix& a = g.matrix();
  const std::size_t k = a.size();
  auto name = [](std::size_t floor, std::size_t idx) { return "v" + std::to_string(floor) + "_" + std::to_string(idx); };

  std::string out = "digraph bratteli {\n";
  for (std::size_t t = 0; t < levels; ++t)
    for (std::size_t i = 0; i < k; ++i) out += "  " + name(t, i) + ";\n";
  for (std::size_t t = 0; t + 1 < levels; ++t)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < k; ++i) {
        const std::string edge = "  " + name(t, j) + " -> " + name(t + 1, i) + ";\n";
        for (Integer c = 0; c < a(i, j); ++c) out += edge;
      }
  out += "}\n";
  return out;
}

}  // namespace tnorm
