#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fec/polar.hpp"
#include "fec/types.hpp"

namespace fec {

inline double clamp_llr(double v) {
    return std::clamp(v, -kSatLlr, kSatLlr);
}

/// Scaled min-sum approximation of the boxplus operation:
/// alpha * sign(a) * sign(b) * min(|a|,|b|). A zero input yields zero.
inline double minsum(double a, double b, double alpha) {
    const double mag = std::min(std::fabs(a), std::fabs(b));
    return ((a < 0.0) == (b < 0.0)) ? alpha * mag : -alpha * mag;
}

struct PeIn {
    double l1, l2;  ///< messages arriving from the channel side of the butterfly
    double r1, r2;  ///< messages arriving from the u side
};

struct PeOut {
    double l1, l2;  ///< messages sent toward the u side
    double r1, r2;  ///< messages sent toward the channel side
};

/// One 2x2 processing element of the factor graph under the min-sum rule.
/// All four outputs are clamped to [-kSatLlr, kSatLlr].
PeOut pe_update(const PeIn& in, double alpha);

/// The n x (m+1) message lattice of a polar factor graph. Column 0 is the
/// code-bit (channel) side, column m the u side. l(i,j) holds the message
/// arriving at node (i,j) from the channel side, r(i,j) the message
/// arriving from the u side; the two boundary columns hold the channel
/// LLRs and the u-side priors respectively.
class FactorGraph {
public:
    FactorGraph(int n, int m);

    /// Zeroes all messages, installs the channel LLR vector in column 0
    /// and the frozen priors (+kSatLlr) in column m.
    void reset(std::span<const double> channel_llr, const PolarCodeSpec& spec);

    /// Stage-by-stage sweep from the channel side to the u side
    /// (updates l columns 1..m).
    void sweep_toward_u(double alpha);

    /// Stage-by-stage sweep from the u side back to the channel side
    /// (updates r columns m-1..0).
    void sweep_toward_channel(double alpha);

    /// Installs an outer-code prior on an information position of column m.
    void set_u_prior(int index, double value) { r_[idx(index, m_)] = clamp_llr(value); }

    double l(int i, int j) const { return l_[idx(i, j)]; }
    double r(int i, int j) const { return r_[idx(i, j)]; }
    double u_total(int i) const { return l(i, m_) + r(i, m_); }
    double channel_total(int i) const { return l(i, 0) + r(i, 0); }

    int n() const { return n_; }
    int m() const { return m_; }

    /// Additions accumulated by the sweeps, four per processing element
    /// per direction (a minimum counts as one addition).
    std::uint64_t additions() const { return additions_; }

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(j) * n_ + i; }

    int n_, m_;
    std::vector<double> l_, r_;  // column-major, (m+1) columns of n entries
    std::uint64_t additions_ = 0;
};

/// Outer-graph exchange bound to a set of u-side positions. Once per
/// iteration the decoder hands the hook the post-sweep l(i,m) values at
/// those positions (the intrinsic information) and installs the returned
/// extrinsic values as column-m priors for the return sweep.
struct OuterExchange {
    std::vector<int> positions;  ///< u-side indices, ascending
    std::function<std::vector<double>(const std::vector<double>&)> exchange;
};

struct BpResult {
    BitVec u_hat;
    BitVec x_hat;
    int iterations = 0;
    /// Lattice additions counted in each iteration (constant across
    /// iterations: 4 n log2 n).
    std::vector<std::uint64_t> lattice_additions;
};

/// Min-sum belief propagation over the polar factor graph with round-trip
/// scheduling. Runs exactly max_iters iterations, each one sweep toward
/// the u side, an optional outer exchange, and one sweep back. Hard
/// decisions decode total LLR >= 0 as bit 0; frozen positions of u_hat are
/// forced to 0.
BpResult bpd_decode(std::span<const double> channel_llr, const PolarCodeSpec& spec,
                    int max_iters, double alpha, const OuterExchange* outer = nullptr);

}  // namespace fec
