#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tnorm/number_field.hpp"
#include "tnorm/surface_bundle.hpp"

namespace tnorm {

/// A class z in H_2(M) ~ Z^k.
struct HomologyClass {
  IntVector z;

  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
};

/// The trace functional of Z[lambda_A], read as a norm on H_2 of the mapping torus.
inline TraceFunctional norm_on_action(const IntMatrix& action, std::size_t prime_budget = kDefaultPrimeBudget) {
  return trace_functional(build_order(action, prime_budget));
}

inline TraceFunctional norm_on_h2(const PseudoAnosovBundle& b, std::size_t prime_budget = kDefaultPrimeBudget) {
  return norm_on_action(b.action(), prime_budget);
}

enum class ConeRegion { Interior, Boundary, Outside };

constexpr std::string_view region_name(ConeRegion r) noexcept {
  switch (r) {
    case ConeRegion::Interior: return "Interior";
    case ConeRegion::Boundary: return "Boundary";
    case ConeRegion::Outside: return "Outside";
  }
  return "Unknown";
}

/// C = N^{-1}(Z^+). Boundary points (N = 0) belong to C but not to its interior.
struct ConeDescription {
  TraceFunctional functional;

  std::size_t dimension() const noexcept { return functional.size(); }
};

inline ConeRegion cone_membership(const ConeDescription& c, const HomologyClass& z) {
  const Integer n = norm_value(c.functional, z.z);
  if (n > 0) return ConeRegion::Interior;
  if (n == 0) return ConeRegion::Boundary;
  return ConeRegion::Outside;
}

namespace detail {

/// Calls f on every point of [-r, r]^k in lexicographic order.
template <typename F>
void for_each_box_point(std::size_t k, long r, F&& f) {
  IntVector z(k, Integer(-r));
  while (true) {
    f(static_cast<const IntVector&>(z));
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (z[pos] < r) {
        ++z[pos];
        break;
      }
      z[pos] = -r;
      if (pos == 0) return;
    }
    if (k == 0) return;
  }
}

}  // namespace detail

/// All z with max |z_j| <= r and N(z) >= 0, lexicographically ordered.
inline std::vector<HomologyClass> enumerate_cone_points(const ConeDescription& c, long box_radius) {
  require(box_radius >= 0, ErrorCode::InvalidArgument, "box radius must be nonnegative");
  std::vector<HomologyClass> out;
  detail::for_each_box_point(c.dimension(), box_radius, [&](const IntVector& z) {
    if (norm_value(c.functional, z) >= 0) out.push_back(HomologyClass{z});
  });
  return out;
}

struct ConeCounterexample {
  enum class Kind { Scaling, Addition };
  Kind kind;
  bool closed_cone;  // false: interior N > 0, true: closed cone N >= 0
  HomologyClass first;
  HomologyClass second;  // Addition only
  long scale = 0;        // Scaling only
};

/// Exhaustive check over the box that the interior and the closed cone are
/// each closed under positive integer scaling and pairwise addition.
inline std::optional<ConeCounterexample> cone_axiom_check(const ConeDescription& c, long box_radius, long scale_max) {
  require(box_radius >= 1, ErrorCode::InvalidArgument, "box radius must be at least 1");
  require(scale_max >= 2, ErrorCode::InvalidArgument, "scale bound must be at least 2");

  std::vector<IntVector> interior, closed;
  detail::for_each_box_point(c.dimension(), box_radius, [&](const IntVector& z) {
    ConeRegion r = cone_membership(c, HomologyClass{z});
    if (r == ConeRegion::Interior) interior.push_back(z);
    if (r != ConeRegion::Outside) closed.push_back(z);
  });

  for (bool closed_cone : {false, true}) {
    const auto& points = closed_cone ? closed : interior;
    auto inside = [&](const IntVector& z) {
      ConeRegion r = cone_membership(c, HomologyClass{z});
      return closed_cone ? r != ConeRegion::Outside : r == ConeRegion::Interior;
    };
    for (const auto& z : points)
      for (long s = 1; s <= scale_max; ++s)
        if (!inside(scale(Integer(s), z)))
          return ConeCounterexample{ConeCounterexample::Kind::Scaling, closed_cone, {z}, {}, s};
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = i; j < points.size(); ++j)
        if (!inside(add(points[i], points[j])))
          return ConeCounterexample{ConeCounterexample::Kind::Addition, closed_cone, {points[i]}, {points[j]}, 0};
  }
  return std::nullopt;
}

/// Gromov norm from the Thurston norm: g = 2 N.
inline Integer gromov_from_thurston(const Integer& n) {
  if (n < 0) throw Error(ErrorCode::NegativeNorm, "norm " + n.get_str() + " is negative");
  return 2 * n;
}

/// Checks claimed Gromov values on the basis classes against the doubling map:
/// basis_values[i] must equal 2 N(e_i) wherever N(e_i) >= 0. Returns the first
/// mismatching 1-based basis index, or nullopt.
inline std::optional<std::size_t> diagram_consistency(const ConeDescription& c, const IntVector& basis_values) {
  require(basis_values.size() == c.dimension(), ErrorCode::DimensionMismatch,
          std::to_string(basis_values.size()) + " basis values for dimension " + std::to_string(c.dimension()));
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    const Integer& n = c.functional.t[i];
    if (n < 0) continue;
    if (basis_values[i] != gromov_from_thurston(n)) return i + 1;
  }
  return std::nullopt;
}

struct NormReport {
  long genus = 0;
  SingularityData singularities;
  std::size_t rank = 0;
  IntPolynomial charpoly;
  TraceFunctional functional;
  HomologyClass fiber_class;
  Integer norm_at_fiber;
  long thurston_fiber_target = 0;
  Integer discrepancy;
  std::optional<Integer> gromov_value;  // absent when the fiber norm is negative
  long dual_euler_value = 0;
  bool negative_fiber_norm = false;
};

/// Compares the trace norm of a user-chosen fiber class with the Thurston norm
/// 2g - 2 of a closed genus-g fiber. The discrepancy is reported, not asserted.
inline NormReport fiber_class_report(const PseudoAnosovBundle& b, const HomologyClass& fiber,
                                     std::size_t prime_budget = kDefaultPrimeBudget) {
  require(fiber.z.size() == b.rank(), ErrorCode::DimensionMismatch,
          "fiber class of length " + std::to_string(fiber.z.size()) + " for rank " + std::to_string(b.rank()));
  NormReport r;
  r.genus = b.genus();
  r.singularities = b.singularities();
  r.rank = b.rank();
  r.charpoly = char_poly(b.action());
  r.functional = norm_on_h2(b, prime_budget);
  r.fiber_class = fiber;
  r.norm_at_fiber = norm_value(r.functional, fiber.z);
  r.thurston_fiber_target = euler_pairing_fiber(b.genus());
  r.discrepancy = r.norm_at_fiber - r.thurston_fiber_target;
  r.negative_fiber_norm = r.norm_at_fiber < 0;
  if (!r.negative_fiber_norm) r.gromov_value = gromov_from_thurston(r.norm_at_fiber);
  r.dual_euler_value = euler_pairing_fiber(b.genus());
  return r;
}

}  // namespace tnorm
