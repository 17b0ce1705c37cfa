#include "fec/sc.hpp"

#include <stdexcept>

#include "fec/bp.hpp"

namespace fec {

namespace {

// Scratch layout: the LLR buffer holds one segment per recursion level,
// the segment for block size s starting right after its parent's. The
// codeword buffer is combined in place.
struct ScWorkspace {
    const PolarCodeSpec* spec;
    std::vector<double> llr;
    BitVec codeword;
    BitVec u_hat;
    std::uint64_t additions = 0;

    void decode_block(int llr_off, int size, int u_base, int cw_off) {
        if (size == 1) {
            const std::uint8_t bit =
                spec->is_info[u_base] ? (llr[llr_off] >= 0.0 ? 0 : 1) : 0;
            u_hat[u_base] = bit;
            codeword[cw_off] = bit;
            return;
        }
        const int half = size / 2;
        const int child = llr_off + size;

        for (int i = 0; i < half; ++i)
            llr[child + i] = minsum(llr[llr_off + i], llr[llr_off + half + i], 1.0);
        additions += half;
        decode_block(child, half, u_base, cw_off);

        for (int i = 0; i < half; ++i) {
            const double a = llr[llr_off + i], b = llr[llr_off + half + i];
            llr[child + i] = codeword[cw_off + i] ? b - a : b + a;
        }
        additions += half;
        decode_block(child, half, u_base + half, cw_off + half);

        for (int i = 0; i < half; ++i)
            codeword[cw_off + i] ^= codeword[cw_off + half + i];
    }
};

}  // namespace

ScResult scd_decode(std::span<const double> channel_llr, const PolarCodeSpec& spec) {
    if (static_cast<int>(channel_llr.size()) != spec.n)
        throw std::invalid_argument("channel LLR length does not match the code length");

    ScWorkspace ws;
    ws.spec = &spec;
    ws.llr.assign(2 * spec.n, 0.0);
    std::copy(channel_llr.begin(), channel_llr.end(), ws.llr.begin());
    ws.codeword.assign(spec.n, 0);
    ws.u_hat.assign(spec.n, 0);
    ws.decode_block(0, spec.n, 0, 0);

    return ScResult{std::move(ws.u_hat), ws.additions};
}

}  // namespace fec
