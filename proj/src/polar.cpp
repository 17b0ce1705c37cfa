#include "fec/polar.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fec {

namespace {

void require_power_of_two(int n) {
    if (n < 1 || !std::has_single_bit(static_cast<unsigned>(n)))
        throw std::invalid_argument("code length must be a positive power of two, got " +
                                    std::to_string(n));
}

}  // namespace

std::vector<double> compute_bhattacharyya(int n, double z0) {
    require_power_of_two(n);
    if (!(z0 > 0.0 && z0 < 1.0))
        throw std::invalid_argument("design parameter z0 must lie in (0,1)");
    const int m = std::countr_zero(static_cast<unsigned>(n));
    std::vector<double> z(n);
    for (int i = 0; i < n; ++i) {
        double v = z0;
        for (int b = m - 1; b >= 0; --b)
            v = ((i >> b) & 1) ? v * v : 2.0 * v - v * v;
        z[i] = v;
    }
    return z;
}

std::pair<std::vector<int>, std::vector<int>>
select_frozen_set(const std::vector<double>& reliability, int k) {
    const int n = static_cast<int>(reliability.size());
    if (k < 0 || k > n)
        throw std::invalid_argument("information count k out of range");
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (reliability[a] != reliability[b]) return reliability[a] < reliability[b];
        return a < b;
    });
    std::vector<int> info(order.begin(), order.begin() + k);
    std::vector<int> frozen(order.begin() + k, order.end());
    std::sort(info.begin(), info.end());
    std::sort(frozen.begin(), frozen.end());
    return {std::move(info), std::move(frozen)};
}

std::vector<int> row_weights(int n) {
    require_power_of_two(n);
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i)
        w[i] = 1 << std::popcount(static_cast<unsigned>(i));
    return w;
}

std::vector<int> leafset(int n, int index) {
    require_power_of_two(n);
    if (n > 64) throw std::invalid_argument("leafset traversal is an oracle for n <= 64");
    if (index < 0 || index >= n) throw std::invalid_argument("index out of range");
    const int m = std::countr_zero(static_cast<unsigned>(n));
    // Walk the stopping tree from u-side column m to code-bit column 0.
    // A node (i, j) reaches (i, j-1), and additionally (i - 2^{j-1}, j-1)
    // when bit j-1 of i is set (it then feeds the XOR of its butterfly).
    std::vector<int> active{index};
    for (int j = m; j >= 1; --j) {
        const int span = 1 << (j - 1);
        std::vector<int> next;
        next.reserve(active.size() * 2);
        for (int i : active) {
            if (i & span) next.push_back(i - span);
            next.push_back(i);
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        active = std::move(next);
    }
    return active;
}

int leafset_size(int n, int index) {
    return static_cast<int>(leafset(n, index).size());
}

void polar_transform_inplace(BitVec& bits) {
    const int n = static_cast<int>(bits.size());
    require_power_of_two(n);
    for (int h = n / 2; h >= 1; h /= 2)
        for (int base = 0; base < n; base += 2 * h)
            for (int k = 0; k < h; ++k)
                bits[base + k] ^= bits[base + k + h];
}

BitVec polar_encode(const BitVec& u) {
    BitVec x = u;
    polar_transform_inplace(x);
    return x;
}

PolarCodeSpec PolarCodeSpec::construct(int n, int k, double z0) {
    require_power_of_two(n);
    if (n < 2) throw std::invalid_argument("a polar code needs n >= 2");
    if (k < 0 || k > n) throw std::invalid_argument("information count k out of range");
    PolarCodeSpec spec;
    spec.n = n;
    spec.m = std::countr_zero(static_cast<unsigned>(n));
    spec.reliability = compute_bhattacharyya(n, z0);
    std::tie(spec.info_set, spec.frozen_set) = select_frozen_set(spec.reliability, k);
    spec.row_weight = row_weights(n);
    spec.is_info.assign(n, 0);
    for (int i : spec.info_set) spec.is_info[i] = 1;
    return spec;
}

}  // namespace fec
