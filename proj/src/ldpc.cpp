#include "fec/ldpc.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "fec/bp.hpp"

namespace fec {

TannerGraph TannerGraph::from_edges(int bit_count, int check_count,
                                    std::vector<std::pair<int, int>> edges) {
    TannerGraph g;
    g.bit_count = bit_count;
    g.check_count = check_count;
    g.edges = std::move(edges);
    g.check_edges.assign(check_count, {});
    g.bit_edges.assign(bit_count, {});
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto [c, b] = g.edges[e];
        if (c < 0 || c >= check_count || b < 0 || b >= bit_count)
            throw std::invalid_argument("edge endpoint out of range");
        g.check_edges[c].push_back(e);
        g.bit_edges[b].push_back(e);
    }
    return g;
}

TannerGraph TannerGraph::from_parity_matrix(const std::vector<BitVec>& h_rows) {
    if (h_rows.empty()) throw std::invalid_argument("empty parity-check matrix");
    const int lc = static_cast<int>(h_rows.size());
    const int lb = static_cast<int>(h_rows[0].size());
    std::vector<std::pair<int, int>> edges;
    for (int c = 0; c < lc; ++c) {
        if (static_cast<int>(h_rows[c].size()) != lb)
            throw std::invalid_argument("ragged parity-check matrix");
        for (int b = 0; b < lb; ++b)
            if (h_rows[c][b]) edges.emplace_back(c, b);
    }
    return from_edges(lb, lc, std::move(edges));
}

bool TannerGraph::is_regular(int bit_degree, int check_degree) const {
    for (const auto& be : bit_edges)
        if (static_cast<int>(be.size()) != bit_degree) return false;
    for (const auto& ce : check_edges)
        if (static_cast<int>(ce.size()) != check_degree) return false;
    return true;
}

bool TannerGraph::has_four_cycle() const {
    // Two bits sharing two checks show up as a repeated check pair.
    std::vector<std::vector<int>> bit_checks(bit_count);
    for (const auto& [c, b] : edges) bit_checks[b].push_back(c);
    std::vector<std::pair<int, int>> pairs;
    for (auto& checks : bit_checks) {
        std::sort(checks.begin(), checks.end());
        if (std::adjacent_find(checks.begin(), checks.end()) != checks.end())
            return true;  // duplicate edge counts as a degenerate short cycle
        for (std::size_t i = 0; i < checks.size(); ++i)
            for (std::size_t j = i + 1; j < checks.size(); ++j)
                pairs.emplace_back(checks[i], checks[j]);
    }
    std::sort(pairs.begin(), pairs.end());
    return std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end();
}

std::vector<BitVec> TannerGraph::dense_h() const {
    std::vector<BitVec> h(check_count, BitVec(bit_count, 0));
    for (const auto& [c, b] : edges) h[c][b] ^= 1;
    return h;
}

std::string TannerGraph::to_alist() const {
    std::ostringstream out;
    std::vector<std::vector<int>> bit_checks(bit_count), check_bits(check_count);
    for (const auto& [c, b] : edges) {
        bit_checks[b].push_back(c);
        check_bits[c].push_back(b);
    }
    std::size_t max_bit = 0, max_check = 0;
    for (const auto& v : bit_checks) max_bit = std::max(max_bit, v.size());
    for (const auto& v : check_bits) max_check = std::max(max_check, v.size());
    out << bit_count << ' ' << check_count << '\n';
    out << max_bit << ' ' << max_check << '\n';
    for (int b = 0; b < bit_count; ++b) out << bit_checks[b].size() << (b + 1 < bit_count ? ' ' : '\n');
    for (int c = 0; c < check_count; ++c) out << check_bits[c].size() << (c + 1 < check_count ? ' ' : '\n');
    for (const auto& v : bit_checks) {
        for (std::size_t i = 0; i < v.size(); ++i) out << v[i] + 1 << (i + 1 < v.size() ? ' ' : '\n');
        if (v.empty()) out << '\n';
    }
    for (const auto& v : check_bits) {
        for (std::size_t i = 0; i < v.size(); ++i) out << v[i] + 1 << (i + 1 < v.size() ? ' ' : '\n');
        if (v.empty()) out << '\n';
    }
    return out.str();
}

LdpcCodeSpec LdpcCodeSpec::from_tanner(TannerGraph graph) {
    const int lb = graph.bit_count, lc = graph.check_count;
    std::vector<BitVec> h = graph.dense_h();

    // Gauss-Jordan over GF(2) with column pivoting; pivot columns become
    // parity positions, the rest carry info bits.
    std::vector<int> pivot_col(lc, -1);
    std::vector<std::uint8_t> col_used(lb, 0);
    int rank = 0;
    for (int col = 0; col < lb && rank < lc; ++col) {
        int pivot = -1;
        for (int r = rank; r < lc; ++r)
            if (h[r][col]) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(h[rank], h[pivot]);
        for (int r = 0; r < lc; ++r) {
            if (r == rank || !h[r][col]) continue;
            for (int j = 0; j < lb; ++j) h[r][j] ^= h[rank][j];
        }
        pivot_col[rank] = col;
        col_used[col] = 1;
        ++rank;
    }
    if (rank < lc) throw std::runtime_error("parity-check matrix is rank-deficient");

    LdpcCodeSpec spec;
    spec.tanner = std::move(graph);
    for (int col = 0; col < lb; ++col)
        if (!col_used[col]) spec.info_positions.push_back(col);
    spec.parity_positions.assign(pivot_col.begin(), pivot_col.end());
    spec.parity_from_info.assign(lc, BitVec(spec.info_positions.size(), 0));
    for (int r = 0; r < lc; ++r)
        for (std::size_t j = 0; j < spec.info_positions.size(); ++j)
            spec.parity_from_info[r][j] = h[r][spec.info_positions[j]];
    return spec;
}

BitVec ldpc_encode(const BitVec& info, const LdpcCodeSpec& spec) {
    if (static_cast<int>(info.size()) != spec.info_bits())
        throw std::invalid_argument("info block length does not match the code");
    BitVec x(spec.bit_count(), 0);
    for (int j = 0; j < spec.info_bits(); ++j) x[spec.info_positions[j]] = info[j];
    for (int r = 0; r < spec.check_count(); ++r) {
        std::uint8_t parity = 0;
        const BitVec& mask = spec.parity_from_info[r];
        for (int j = 0; j < spec.info_bits(); ++j) parity ^= mask[j] & info[j];
        x[spec.parity_positions[r]] = parity;
    }
    return x;
}

LdpcCodeSpec construct_regular_ldpc(int lb, int lc, std::uint64_t seed) {
    constexpr int kBitDegree = 3;
    constexpr int kMaxAttempts = 500;
    if (lb <= 0 || lc <= 0 || lb % 2 != 0)
        throw std::invalid_argument("need a positive even bit count");
    if ((kBitDegree * lb) % lc != 0)
        throw std::invalid_argument("3*lb must be divisible by lc");
    const int check_degree = kBitDegree * lb / lc;

    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(attempt));
        std::vector<std::vector<int>> bit_checks(lb), check_bits(lc);
        std::vector<int> check_deg(lc, 0);
        bool stuck = false;

        for (int b = 0; b < lb && !stuck; ++b) {
            for (int t = 0; t < kBitDegree; ++t) {
                // A check is forbidden if it is already attached to b or
                // if it touches any bit that shares a check with b (that
                // edge would close a length-4 cycle).
                std::vector<std::uint8_t> forbidden(lc, 0);
                for (int c : bit_checks[b]) forbidden[c] = 1;
                for (int c : bit_checks[b])
                    for (int b2 : check_bits[c])
                        if (b2 != b)
                            for (int c2 : bit_checks[b2]) forbidden[c2] = 1;

                int best_deg = check_degree;
                std::vector<int> candidates;
                for (int c = 0; c < lc; ++c) {
                    if (forbidden[c] || check_deg[c] >= check_degree) continue;
                    if (check_deg[c] < best_deg) {
                        best_deg = check_deg[c];
                        candidates.clear();
                    }
                    if (check_deg[c] == best_deg) candidates.push_back(c);
                }
                if (candidates.empty()) {
                    stuck = true;
                    break;
                }
                std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
                const int c = candidates[pick(rng)];
                bit_checks[b].push_back(c);
                check_bits[c].push_back(b);
                ++check_deg[c];
            }
        }
        if (stuck) continue;

        std::vector<std::pair<int, int>> edges;
        edges.reserve(static_cast<std::size_t>(kBitDegree) * lb);
        for (int b = 0; b < lb; ++b)
            for (int c : bit_checks[b]) edges.emplace_back(c, b);
        TannerGraph graph = TannerGraph::from_edges(lb, lc, std::move(edges));
        try {
            return LdpcCodeSpec::from_tanner(std::move(graph));
        } catch (const std::runtime_error&) {
            // rank-deficient draw, take the next seed
        }
    }
    throw std::runtime_error("no girth-6 regular graph found within the retry budget");
}

TannerState::TannerState(const TannerGraph& g) : graph(&g) {
    bit_to_check.assign(g.edge_count(), 0.0);
    check_to_bit.assign(g.edge_count(), 0.0);
}

void TannerState::reset() {
    std::fill(bit_to_check.begin(), bit_to_check.end(), 0.0);
    std::fill(check_to_bit.begin(), check_to_bit.end(), 0.0);
    additions = 0;
}

std::vector<double> tanner_bp_round(const std::vector<double>& intrinsic,
                                    TannerState& state, double alpha) {
    const TannerGraph& g = *state.graph;
    if (static_cast<int>(intrinsic.size()) != g.bit_count)
        throw std::invalid_argument("intrinsic length does not match the bit count");

    for (int b = 0; b < g.bit_count; ++b) {
        for (int e : g.bit_edges[b]) {
            double msg = intrinsic[b];
            for (int e2 : g.bit_edges[b])
                if (e2 != e) msg += state.check_to_bit[e2];
            state.bit_to_check[e] = clamp_llr(msg);
        }
    }
    state.additions += 2 * static_cast<std::uint64_t>(g.edge_count());

    for (int c = 0; c < g.check_count; ++c) {
        for (int e : g.check_edges[c]) {
            double mag = kSatLlr;
            bool negative = false;
            for (int e2 : g.check_edges[c]) {
                if (e2 == e) continue;
                const double v = state.bit_to_check[e2];
                mag = std::min(mag, std::fabs(v));
                negative ^= (v < 0.0);
            }
            state.check_to_bit[e] = clamp_llr(negative ? -alpha * mag : alpha * mag);
        }
    }
    state.additions += 2 * static_cast<std::uint64_t>(g.edge_count());

    std::vector<double> extrinsic(g.bit_count, 0.0);
    for (int b = 0; b < g.bit_count; ++b)
        for (int e : g.bit_edges[b]) extrinsic[b] += state.check_to_bit[e];
    return extrinsic;
}

}  // namespace fec
