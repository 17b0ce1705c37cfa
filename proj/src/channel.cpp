#include "fec/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace fec {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

double ChannelConfig::sigma_sq() const {
    if (!(code_rate > 0.0 && code_rate <= 1.0))
        throw std::invalid_argument("code rate must lie in (0,1]");
    return 1.0 / (2.0 * code_rate * std::pow(10.0, ebn0_db / 10.0));
}

double ChannelConfig::sigma() const { return std::sqrt(sigma_sq()); }

FrameRng::FrameRng(std::uint64_t master_seed, std::uint64_t frame_index)
    : engine_(splitmix64(splitmix64(master_seed) ^ (frame_index + 1))) {}

std::uint8_t FrameRng::bit() { return static_cast<std::uint8_t>(engine_() & 1u); }

double FrameRng::gaussian() { return normal_(engine_); }

BitVec FrameRng::bits(int count) {
    BitVec v(count);
    for (auto& b : v) b = bit();
    return v;
}

std::vector<double> bpsk_awgn(const BitVec& x, const ChannelConfig& cfg, FrameRng& rng) {
    const double s2 = cfg.sigma_sq();
    const double sd = std::sqrt(s2);
    std::vector<double> llr(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double symbol = x[i] ? -1.0 : 1.0;
        const double y = symbol + sd * rng.gaussian();
        llr[i] = 2.0 * y / s2;
    }
    return llr;
}

}  // namespace fec
