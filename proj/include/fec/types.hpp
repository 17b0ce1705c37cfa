#pragma once

#include <cstdint>
#include <vector>

namespace fec {

/// A block of binary symbols. Values are strictly 0 or 1.
using BitVec = std::vector<std::uint8_t>;

/// Saturation magnitude used to represent certainty in LLR arithmetic
/// (frozen priors, noiseless evidence). Large enough to dominate any
/// realistic channel LLR at simulated SNRs, small enough that sums of a
/// few saturated values stay far from overflow.
inline constexpr double kSatLlr = 64.0;

}  // namespace fec
