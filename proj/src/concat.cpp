#include "fec/concat.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace fec {

std::vector<int> select_ldpc_bits_proposed(const std::vector<int>& info_set,
                                           const std::vector<double>& reliability,
                                           const std::vector<int>& row_weight, int dn) {
    if (dn < 0 || dn > static_cast<int>(info_set.size()))
        throw std::invalid_argument("dn exceeds the information set");
    std::map<int, std::vector<int>> by_weight;  // ascending weight
    for (int i : info_set) by_weight[row_weight[i]].push_back(i);
    std::vector<int> picked;
    picked.reserve(dn);
    for (auto& [w, subset] : by_weight) {
        std::sort(subset.begin(), subset.end(), [&](int a, int b) {
            if (reliability[a] != reliability[b]) return reliability[a] > reliability[b];
            return a < b;
        });
        for (int i : subset) {
            if (static_cast<int>(picked.size()) == dn) return picked;
            picked.push_back(i);
        }
    }
    return picked;
}

std::vector<int> select_ldpc_bits_ic(const std::vector<int>& info_set,
                                     const std::vector<double>& reliability, int dn) {
    if (dn < 0 || dn > static_cast<int>(info_set.size()))
        throw std::invalid_argument("dn exceeds the information set");
    std::vector<int> order = info_set;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (reliability[a] != reliability[b]) return reliability[a] > reliability[b];
        return a < b;
    });
    order.resize(dn);
    return order;
}

ConcatSpec ConcatSpec::make(int n, int ng, int dn, BitSelection selection, double z0,
                            std::optional<LdpcCodeSpec> outer) {
    if (ng < 0 || dn < 0 || ng + dn > n)
        throw std::invalid_argument("ng + dn must fit the code length");
    if (dn > 0) {
        if (!outer.has_value())
            throw std::invalid_argument("dn > 0 needs an outer LDPC code");
        if (outer->bit_count() != dn)
            throw std::invalid_argument("outer code length must equal dn");
    }

    ConcatSpec spec;
    spec.polar = PolarCodeSpec::construct(n, ng + dn, z0);
    spec.ng = ng;
    spec.dn = dn;
    if (dn > 0) spec.ldpc = std::move(outer);

    std::vector<int> picked;
    switch (selection) {
        case BitSelection::kSmallLeafset:
            picked = select_ldpc_bits_proposed(spec.polar.info_set, spec.polar.reliability,
                                               spec.polar.row_weight, dn);
            break;
        case BitSelection::kIntermediate:
            picked = select_ldpc_bits_ic(spec.polar.info_set, spec.polar.reliability, dn);
            break;
    }
    spec.u_ldpc = picked;
    std::sort(spec.u_ldpc.begin(), spec.u_ldpc.end());
    std::vector<std::uint8_t> in_ldpc(n, 0);
    for (int i : spec.u_ldpc) in_ldpc[i] = 1;
    for (int i : spec.polar.info_set)
        if (!in_ldpc[i]) spec.u_direct.push_back(i);
    return spec;
}

std::string ConcatSpec::describe_json() const {
    nlohmann::json j;
    j["n"] = polar.n;
    j["k_polar"] = polar.k();
    j["ng"] = ng;
    j["dn"] = dn;
    j["rate_polar"] = rate_polar();
    j["rate_overall"] = rate_overall();
    j["payload_bits"] = payload_bits();
    j["u_ldpc"] = u_ldpc;
    j["u_direct"] = u_direct;
    nlohmann::json sel = nlohmann::json::array();
    for (int i : u_ldpc) {
        sel.push_back({{"index", i},
                       {"row_weight", polar.row_weight[i]},
                       {"reliability", polar.reliability[i]}});
    }
    j["u_ldpc_detail"] = sel;
    if (ldpc.has_value()) {
        j["ldpc"] = {{"bit_count", ldpc->bit_count()},
                     {"check_count", ldpc->check_count()},
                     {"edges", ldpc->tanner.edge_count()},
                     {"rate", ldpc->rate()}};
    }
    return j.dump(2);
}

BitVec concat_encode(const BitVec& payload, const ConcatSpec& spec) {
    if (static_cast<int>(payload.size()) != spec.payload_bits())
        throw std::invalid_argument("payload length does not match the code");
    BitVec u(spec.polar.n, 0);
    int pos = 0;
    if (spec.dn > 0) {
        BitVec outer_info(payload.begin(), payload.begin() + spec.ldpc->info_bits());
        const BitVec outer_word = ldpc_encode(outer_info, *spec.ldpc);
        for (int j = 0; j < spec.dn; ++j) u[spec.u_ldpc[j]] = outer_word[j];
        pos = spec.ldpc->info_bits();
    }
    for (std::size_t j = 0; j < spec.u_direct.size(); ++j)
        u[spec.u_direct[j]] = payload[pos + j];
    polar_transform_inplace(u);
    return u;
}

ConcatResult concat_decode(std::span<const double> channel_llr, const ConcatSpec& spec,
                           int max_iters, double alpha) {
    BpResult bp;
    std::vector<std::uint64_t> tanner_adds;
    if (spec.dn > 0) {
        TannerState state(spec.ldpc->tanner);
        state.reset();
        std::uint64_t counted = 0;
        OuterExchange outer;
        outer.positions = spec.u_ldpc;
        outer.exchange = [&](const std::vector<double>& intrinsic) {
            auto extrinsic = tanner_bp_round(intrinsic, state, alpha);
            tanner_adds.push_back(state.additions - counted);
            counted = state.additions;
            return extrinsic;
        };
        bp = bpd_decode(channel_llr, spec.polar, max_iters, alpha, &outer);
    } else {
        bp = bpd_decode(channel_llr, spec.polar, max_iters, alpha, nullptr);
        tanner_adds.assign(bp.lattice_additions.size(), 0);
    }

    ConcatResult res;
    res.iterations = bp.iterations;
    res.additions.resize(bp.lattice_additions.size());
    for (std::size_t t = 0; t < res.additions.size(); ++t)
        res.additions[t] = bp.lattice_additions[t] + tanner_adds[t];

    res.payload_hat.assign(spec.payload_bits(), 0);
    int pos = 0;
    if (spec.dn > 0) {
        BitVec outer_word(spec.dn, 0);
        for (int j = 0; j < spec.dn; ++j) outer_word[j] = bp.u_hat[spec.u_ldpc[j]];
        for (int j = 0; j < spec.ldpc->info_bits(); ++j)
            res.payload_hat[j] = outer_word[spec.ldpc->info_positions[j]];
        pos = spec.ldpc->info_bits();
    }
    for (std::size_t j = 0; j < spec.u_direct.size(); ++j)
        res.payload_hat[pos + j] = bp.u_hat[spec.u_direct[j]];
    res.u_hat = std::move(bp.u_hat);
    res.x_hat = std::move(bp.x_hat);
    return res;
}

}  // namespace fec
