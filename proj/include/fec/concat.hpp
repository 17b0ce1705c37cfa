#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fec/bp.hpp"
#include "fec/ldpc.hpp"
#include "fec/polar.hpp"
#include "fec/types.hpp"

namespace fec {

/// How the outer-coded positions are chosen from the information set.
enum class BitSelection {
    kSmallLeafset,   ///< lightest generator-row weights first, then largest Z
    kIntermediate,  ///< largest Z outright
};

/// Leafset-driven selection: partition the information set into subsets of
/// equal generator-row weight, order the subsets by ascending weight, sort
/// each subset by descending Bhattacharyya parameter (least reliable
/// first, ties toward the lower index), concatenate and take the first dn
/// indices. Returned in selection order.
std::vector<int> select_ldpc_bits_proposed(const std::vector<int>& info_set,
                                           const std::vector<double>& reliability,
                                           const std::vector<int>& row_weight, int dn);

/// Intermediate-channel selection: the dn information indices with the
/// largest Bhattacharyya parameter, ties toward the lower index.
std::vector<int> select_ldpc_bits_ic(const std::vector<int>& info_set,
                                     const std::vector<double>& reliability, int dn);

/// A short LDPC outer code bound to dn information positions of an inner
/// polar code. Payload layout: the outer code's info bits first, then the
/// ng unprotected good-channel bits.
struct ConcatSpec {
    PolarCodeSpec polar;            ///< |info_set| = ng + dn
    std::optional<LdpcCodeSpec> ldpc;  ///< absent iff dn == 0
    std::vector<int> u_ldpc;   ///< outer-coded positions, ascending
    std::vector<int> u_direct;  ///< remaining information positions, ascending
    int ng = 0;
    int dn = 0;

    double rate_polar() const { return static_cast<double>(ng + dn) / polar.n; }
    double rate_overall() const {
        const double r_ldpc = dn > 0 ? ldpc->rate() : 0.0;
        return (ng + dn * r_ldpc) / polar.n;
    }
    int payload_bits() const { return ng + (dn > 0 ? ldpc->info_bits() : 0); }

    /// Builds the polar code with ng+dn information positions, picks
    /// u_ldpc by the given rule and binds the outer code (required when
    /// dn > 0, its length must equal dn).
    static ConcatSpec make(int n, int ng, int dn, BitSelection selection, double z0,
                           std::optional<LdpcCodeSpec> outer);

    /// Structured text description (n, ng, dn, rates, selected indices
    /// with weights and Z values) for reproducibility.
    std::string describe_json() const;
};

/// Outer-encode the first lb-lc payload bits, place the outer codeword on
/// u_ldpc (ascending) and the remaining ng payload bits on u_direct
/// (ascending), zero the frozen positions, polar-encode.
BitVec concat_encode(const BitVec& payload, const ConcatSpec& spec);

struct ConcatResult {
    BitVec payload_hat;
    BitVec u_hat;
    BitVec x_hat;
    int iterations = 0;
    /// Combined lattice + Tanner additions counted in each iteration.
    std::vector<std::uint64_t> additions;
};

/// Round-trip decoding over the extended factor graph: per iteration the
/// u-side l values at u_ldpc feed the Tanner graph as intrinsic
/// information and the returned extrinsic values become column-m priors
/// for the return sweep. With dn == 0 this is exactly the baseline BP
/// decode.
ConcatResult concat_decode(std::span<const double> channel_llr, const ConcatSpec& spec,
                           int max_iters, double alpha);

}  // namespace fec
