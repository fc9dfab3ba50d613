#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tnorm/perron.hpp"

namespace tnorm {

/// Prong counts n_1, ..., n_m of the saddles of the invariant foliation.
struct SingularityData {
  std::vector<long> prongs;

  std::size_t count() const noexcept { return prongs.size(); }
  friend bool operator==(const SingularityData&, const SingularityData&) = default;
};

/// Throws unless g >= 2, every prong count is >= 3, 1 <= m <= 4g - 4 and the
/// saddle indices sum to the Euler characteristic: sum (n_i - 2) = 4g - 4.
inline void validate_singularity_data(long genus, const SingularityData& sing) {
  if (genus < 2) throw Error(ErrorCode::GenusTooSmall, "genus " + std::to_string(genus) + " < 2");
  for (long n : sing.prongs)
    if (n < 3) throw Error(ErrorCode::ProngTooSmall, "saddle with " + std::to_string(n) + " prongs");
  const auto m = static_cast<long>(sing.count());
  if (m < 1 || m > 4 * genus - 4)
    throw Error(ErrorCode::CardinalityOutOfRange,
                std::to_string(m) + " singularities, expected 1.." + std::to_string(4 * genus - 4));
  long index_sum = 0;
  for (long n : sing.prongs) index_sum += n - 2;
  if (index_sum != 4 * genus - 4)
    throw Error(ErrorCode::IndexSumMismatch, "sum of (n - 2) is " + std::to_string(index_sum) + ", expected " +
                                                 std::to_string(4 * genus - 4));
}

/// rank H_2(M) = 2g + m - 1.
inline long h2_rank(long genus, long m) {
  if (genus < 2) throw Error(ErrorCode::GenusTooSmall, "genus " + std::to_string(genus) + " < 2");
  if (m < 1 || m > 4 * genus - 4)
    throw Error(ErrorCode::CardinalityOutOfRange,
                std::to_string(m) + " singularities, expected 1.." + std::to_string(4 * genus - 4));
  return 2 * genus + m - 1;
}

/// |<e(tau), [X]>| = |chi(X)| = 2g - 2 for the fiber X of genus g.
inline long euler_pairing_fiber(long genus) {
  if (genus < 2) throw Error(ErrorCode::GenusTooSmall, "genus " + std::to_string(genus) + " < 2");
  return 2 * genus - 2;
}

/// Mapping torus of a pseudo-Anosov map, described by the genus of the fiber,
/// the singularity data and the action on H_1(X, Sing F; Z).
class PseudoAnosovBundle {
 public:
  long genus() const noexcept { return genus_; }
  const SingularityData& singularities() const noexcept { return sing_; }
  const IntMatrix& action() const noexcept { return action_; }
  std::size_t rank() const noexcept { return action_.size(); }
  // Pseudo-Anosov monodromy makes the mapping torus hyperbolic; recorded, not computed.
  bool hyperbolic() const noexcept { return true; }
  std::size_t primitivity_witness() const noexcept { return witness_; }

  friend PseudoAnosovBundle build_bundle(long genus, SingularityData sing, IntMatrix action);

 private:
  PseudoAnosovBundle(long g, SingularityData s, IntMatrix a, std::size_t w)
      : genus_(g), sing_(std::move(s)), action_(std::move(a)), witness_(w) {}

  long genus_;
  SingularityData sing_;
  IntMatrix action_;
  std::size_t witness_;
};

inline PseudoAnosovBundle build_bundle(long genus, SingularityData sing, IntMatrix action) {
  validate_singularity_data(genus, sing);
  const long k = h2_rank(genus, static_cast<long>(sing.count()));
  if (static_cast<long>(action.size()) != k)
    throw Error(ErrorCode::ActionDimensionMismatch, "action is " + std::to_string(action.size()) + "x" +
                                                        std::to_string(action.size()) + ", rank formula gives " +
                                                        std::to_string(k));
  std::size_t witness = require_primitive(action);
  return PseudoAnosovBundle(genus, std::move(sing), std::move(action), witness);
}

}  // namespace tnorm
