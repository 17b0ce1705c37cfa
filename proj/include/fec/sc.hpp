#pragma once

#include <cstdint>
#include <span>

#include "fec/polar.hpp"
#include "fec/types.hpp"

namespace fec {

struct ScResult {
    BitVec u_hat;
    /// f/g node evaluations, each counted as one addition: n log2 n per frame.
    std::uint64_t additions = 0;
};

/// Successive cancellation decoding in natural index order. f-nodes use
/// the unscaled min-sum rule, g-nodes compute b + (1-2u)a; frozen
/// positions decode to 0 unconditionally and a decision LLR of exactly
/// zero decodes to 0.
ScResult scd_decode(std::span<const double> channel_llr, const PolarCodeSpec& spec);

}  // namespace fec
