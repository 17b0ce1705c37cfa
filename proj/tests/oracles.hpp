// Independent reference routes used only by the tests. These deliberately
// avoid the library's computation paths: dense matrix algebra instead of
// butterflies, per-decision recomputation instead of shared partial sums.
#pragma once

#include <cmath>
#include <vector>

#include "fec/polar.hpp"
#include "fec/types.hpp"

namespace oracle {

// Dense generator matrix of the n-fold polar transform. Entry (i,j) is 1
// exactly when the bit pattern of j is contained in that of i.
inline std::vector<fec::BitVec> dense_generator(int n) {
    std::vector<fec::BitVec> g(n, fec::BitVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g[i][j] = ((i & j) == j) ? 1 : 0;
    return g;
}

inline fec::BitVec dense_encode(const fec::BitVec& u) {
    const int n = static_cast<int>(u.size());
    const auto g = dense_generator(n);
    fec::BitVec x(n, 0);
    for (int j = 0; j < n; ++j) {
        std::uint8_t acc = 0;
        for (int i = 0; i < n; ++i) acc ^= u[i] & g[i][j];
        x[j] = acc;
    }
    return x;
}

inline double minsum_ref(double a, double b) {
    const double sign = (a >= 0 ? 1.0 : -1.0) * (b >= 0 ? 1.0 : -1.0);
    return sign * std::min(std::fabs(a), std::fabs(b));
}

// Decision LLR of one successive-cancellation step, recomputed from
// scratch: partial sums come from re-encoding the decided prefix with the
// dense transform rather than from incremental combines.
inline double sc_decision_llr(const std::vector<double>& llr, const fec::BitVec& prefix) {
    const int size = static_cast<int>(llr.size());
    if (size == 1) return llr[0];
    const int half = size / 2;
    const int decided = static_cast<int>(prefix.size());
    std::vector<double> sub(half);
    if (decided < half) {
        for (int i = 0; i < half; ++i) sub[i] = minsum_ref(llr[i], llr[half + i]);
        return sc_decision_llr(sub, prefix);
    }
    fec::BitVec left(prefix.begin(), prefix.begin() + half);
    const fec::BitVec partial = dense_encode(left);
    for (int i = 0; i < half; ++i)
        sub[i] = partial[i] ? llr[half + i] - llr[i] : llr[half + i] + llr[i];
    fec::BitVec rest(prefix.begin() + half, prefix.end());
    return sc_decision_llr(sub, rest);
}

inline fec::BitVec sc_decode_ref(const std::vector<double>& llr,
                                 const fec::PolarCodeSpec& spec) {
    fec::BitVec u_hat;
    u_hat.reserve(spec.n);
    for (int i = 0; i < spec.n; ++i) {
        const double decision = sc_decision_llr(llr, u_hat);
        u_hat.push_back(spec.is_info[i] ? (decision >= 0.0 ? 0 : 1) : 0);
    }
    return u_hat;
}

}  // namespace oracle
