#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fec/types.hpp"

namespace fec {

/// BPSK over AWGN at a given Eb/N0, with the noise variance derived from
/// the overall code rate: sigma^2 = 1 / (2 * rate * 10^(ebn0_db/10)).
struct ChannelConfig {
    double ebn0_db = 0.0;
    double code_rate = 0.5;
    std::uint64_t seed = 0;

    double sigma_sq() const;
    double sigma() const;
};

/// Deterministic per-frame random stream derived from (master seed, frame
/// index), so frames can be simulated in any order or in parallel without
/// changing results.
class FrameRng {
public:
    FrameRng(std::uint64_t master_seed, std::uint64_t frame_index);

    std::uint8_t bit();
    double gaussian();
    BitVec bits(int count);

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_;
};

/// Modulates bit 0 -> +1, 1 -> -1, adds Gaussian noise and returns the
/// channel LLRs 2y/sigma^2.
std::vector<double> bpsk_awgn(const BitVec& x, const ChannelConfig& cfg, FrameRng& rng);

}  // namespace fec
