#include "fec/bp.hpp"

#include <stdexcept>

namespace fec {

PeOut pe_update(const PeIn& in, double alpha) {
    PeOut out;
    out.l1 = clamp_llr(minsum(in.l1, in.l2 + in.r2, alpha));
    out.l2 = clamp_llr(minsum(in.l1, in.r1, alpha) + in.l2);
    out.r1 = clamp_llr(minsum(in.r1, in.r2 + in.l2, alpha));
    out.r2 = clamp_llr(minsum(in.r1, in.l1, alpha) + in.r2);
    return out;
}

FactorGraph::FactorGraph(int n, int m) : n_(n), m_(m) {
    l_.assign(static_cast<std::size_t>(n_) * (m_ + 1), 0.0);
    r_.assign(static_cast<std::size_t>(n_) * (m_ + 1), 0.0);
}

void FactorGraph::reset(std::span<const double> channel_llr, const PolarCodeSpec& spec) {
    if (static_cast<int>(channel_llr.size()) != n_)
        throw std::invalid_argument("channel LLR length does not match the code length");
    std::fill(l_.begin(), l_.end(), 0.0);
    std::fill(r_.begin(), r_.end(), 0.0);
    std::copy(channel_llr.begin(), channel_llr.end(), l_.begin());  // column 0
    for (int i : spec.frozen_set) r_[idx(i, m_)] = kSatLlr;
    additions_ = 0;
}

void FactorGraph::sweep_toward_u(double alpha) {
    for (int j = 1; j <= m_; ++j) {
        const int span = 1 << (j - 1);
        for (int a = 0; a < n_; ++a) {
            if (a & span) continue;
            const int b = a + span;
            const double l1 = l_[idx(a, j - 1)], l2 = l_[idx(b, j - 1)];
            const double r1 = r_[idx(a, j)], r2 = r_[idx(b, j)];
            l_[idx(a, j)] = clamp_llr(minsum(l1, l2 + r2, alpha));
            l_[idx(b, j)] = clamp_llr(minsum(l1, r1, alpha) + l2);
            additions_ += 4;  // two adds, two mins
        }
    }
}

void FactorGraph::sweep_toward_channel(double alpha) {
    for (int j = m_; j >= 1; --j) {
        const int span = 1 << (j - 1);
        for (int a = 0; a < n_; ++a) {
            if (a & span) continue;
            const int b = a + span;
            const double l1 = l_[idx(a, j - 1)], l2 = l_[idx(b, j - 1)];
            const double r1 = r_[idx(a, j)], r2 = r_[idx(b, j)];
            r_[idx(a, j - 1)] = clamp_llr(minsum(r1, r2 + l2, alpha));
            r_[idx(b, j - 1)] = clamp_llr(minsum(r1, l1, alpha) + r2);
            additions_ += 4;
        }
    }
}

BpResult bpd_decode(std::span<const double> channel_llr, const PolarCodeSpec& spec,
                    int max_iters, double alpha, const OuterExchange* outer) {
    if (max_iters < 1) throw std::invalid_argument("max_iters must be at least 1");
    if (static_cast<int>(channel_llr.size()) != spec.n)
        throw std::invalid_argument("channel LLR length does not match the code length");

    FactorGraph graph(spec.n, spec.m);
    graph.reset(channel_llr, spec);

    BpResult res;
    res.lattice_additions.reserve(max_iters);
    std::uint64_t counted = 0;

    std::vector<double> intrinsic;
    for (int t = 0; t < max_iters; ++t) {
        graph.sweep_toward_u(alpha);
        if (outer != nullptr) {
            intrinsic.resize(outer->positions.size());
            for (std::size_t p = 0; p < outer->positions.size(); ++p)
                intrinsic[p] = graph.l(outer->positions[p], spec.m);
            const std::vector<double> extrinsic = outer->exchange(intrinsic);
            for (std::size_t p = 0; p < outer->positions.size(); ++p)
                graph.set_u_prior(outer->positions[p], extrinsic[p]);
        }
        graph.sweep_toward_channel(alpha);
        res.lattice_additions.push_back(graph.additions() - counted);
        counted = graph.additions();
    }

    res.u_hat.assign(spec.n, 0);
    res.x_hat.assign(spec.n, 0);
    for (int i = 0; i < spec.n; ++i) {
        if (spec.is_info[i]) res.u_hat[i] = graph.u_total(i) >= 0.0 ? 0 : 1;
        res.x_hat[i] = graph.channel_total(i) >= 0.0 ? 0 : 1;
    }
    res.iterations = max_iters;
    return res;
}

}  // namespace fec
