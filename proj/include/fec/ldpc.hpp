#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fec/types.hpp"

namespace fec {

/// Sparse bipartite graph of a parity-check matrix: check nodes are rows,
/// bit nodes are columns, one edge per 1-entry.
struct TannerGraph {
    int bit_count = 0;
    int check_count = 0;
    std::vector<std::pair<int, int>> edges;    ///< (check, bit) per edge
    std::vector<std::vector<int>> check_edges;  ///< per check, incident edge ids
    std::vector<std::vector<int>> bit_edges;    ///< per bit, incident edge ids

    static TannerGraph from_edges(int bit_count, int check_count,
                                  std::vector<std::pair<int, int>> edges);
    static TannerGraph from_parity_matrix(const std::vector<BitVec>& h_rows);

    int edge_count() const { return static_cast<int>(edges.size()); }
    bool is_regular(int bit_degree, int check_degree) const;
    /// True if two bit nodes share more than one check (a length-4 cycle).
    bool has_four_cycle() const;
    std::vector<BitVec> dense_h() const;
    /// MacKay alist text form of H.
    std::string to_alist() const;
};

/// An LDPC code with a systematic encoder derived from H by GF(2)
/// elimination. Codewords keep the graph's column order; info_positions
/// lists the columns that carry payload bits (the column permutation
/// [info_positions, parity_positions] is the systematic form).
struct LdpcCodeSpec {
    TannerGraph tanner;
    std::vector<int> info_positions;    ///< non-pivot columns, ascending
    std::vector<int> parity_positions;  ///< pivot column of each reduced row
    /// parity_from_info[r] holds the info-bit mask whose GF(2) sum gives
    /// the parity bit at parity_positions[r].
    std::vector<BitVec> parity_from_info;

    int bit_count() const { return tanner.bit_count; }
    int check_count() const { return tanner.check_count; }
    int info_bits() const { return static_cast<int>(info_positions.size()); }
    double rate() const { return static_cast<double>(info_bits()) / bit_count(); }

    /// Throws if H is rank-deficient.
    static LdpcCodeSpec from_tanner(TannerGraph graph);
};

/// Seeded randomized progressive-edge-growth construction of a regular
/// LDPC code with bit degree 3 and check degree 3*lb/lc. Candidate checks
/// that would close a length-4 cycle are rejected outright, so every
/// returned graph has girth >= 6; rank-deficient draws are retried with
/// an incremented seed. Throws after a bounded number of failed attempts.
LdpcCodeSpec construct_regular_ldpc(int lb, int lc, std::uint64_t seed);

/// Systematic encoding: info bits land on info_positions, parities on
/// parity_positions; H x^T = 0 for every output.
BitVec ldpc_encode(const BitVec& info, const LdpcCodeSpec& spec);

/// Per-edge message memory of an iterative Tanner-graph decode. Persists
/// across rounds within one frame; reset() zeroes it for the next frame.
struct TannerState {
    explicit TannerState(const TannerGraph& graph);

    const TannerGraph* graph;
    std::vector<double> bit_to_check;  ///< per edge
    std::vector<double> check_to_bit;  ///< per edge
    /// Additions accumulated, 2e per propagation direction per round.
    std::uint64_t additions = 0;

    void reset();
};

/// One full bit->check then check->bit min-sum exchange. Bit->check
/// messages combine the intrinsic value with the stored check->bit
/// messages of the previous round (zero on a fresh state); the returned
/// extrinsic vector sums the new check->bit messages per bit, excluding
/// the intrinsic.
std::vector<double> tanner_bp_round(const std::vector<double>& intrinsic,
                                    TannerState& state, double alpha);

}  // namespace fec
