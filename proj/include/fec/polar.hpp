#pragma once

#include <utility>
#include <vector>

#include "fec/types.hpp"

namespace fec {

/// A polar code of length n = 2^m in natural (non-bit-reversed) index
/// order. The generator matrix is the m-th Kronecker power of the 2x2
/// kernel [[1,0],[1,1]]; no bit-reversal permutation is applied anywhere.
struct PolarCodeSpec {
    int n = 0;  ///< code length, power of two
    int m = 0;  ///< log2(n)
    std::vector<int> info_set;      ///< information positions, ascending
    std::vector<int> frozen_set;    ///< frozen positions, ascending
    std::vector<double> reliability;  ///< Bhattacharyya parameter per index
    std::vector<int> row_weight;      ///< generator row weight per index
    std::vector<std::uint8_t> is_info;  ///< per-index mask, 1 = information

    int k() const { return static_cast<int>(info_set.size()); }

    /// Builds an (n,k) code: Bhattacharyya reliabilities from the erasure
    /// design parameter z0, then the k most reliable positions as the
    /// information set.
    static PolarCodeSpec construct(int n, int k, double z0 = 0.5);
};

/// Bhattacharyya parameters for all n bit channels under the binary
/// erasure recursion Z- = 2z - z^2, Z+ = z^2, applied log2(n) times in
/// natural index order starting from z0. Index n-1 always carries the
/// minimum, index 0 the maximum.
std::vector<double> compute_bhattacharyya(int n, double z0);

/// Splits {0..n-1} into (info_set, frozen_set): the information set holds
/// the k indices with the smallest Bhattacharyya parameter (smaller =
/// more reliable), ties broken toward the lower index. Both sets sorted
/// ascending.
std::pair<std::vector<int>, std::vector<int>>
select_frozen_set(const std::vector<double>& reliability, int k);

/// Hamming weight of each row of the n x n generator matrix; entry i
/// equals 2^popcount(i).
std::vector<int> row_weights(int n);

/// Leafset size of the input node at the given index: the stopping tree
/// rooted at u-side node (index, m) is traversed to the code-bit side and
/// its distinct stage-0 leaves are counted. Independent of row_weights by
/// construction (graph traversal, not a closed form). Oracle scale: n <= 64.
int leafset_size(int n, int index);

/// Stage-0 node indices of the stopping-tree leafset, ascending.
std::vector<int> leafset(int n, int index);

/// x = u * F^{(x)m} over GF(2), computed in place via the m-stage
/// butterfly in O(n log n) XORs. Involution: applying it twice restores u.
void polar_transform_inplace(BitVec& bits);

/// Out-of-place wrapper around polar_transform_inplace.
BitVec polar_encode(const BitVec& u);

}  // namespace fec
