#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fec/concat.hpp"
#include "fec/polar.hpp"

namespace fec {

enum class DecoderKind { kScd, kBpd, kIcLdpc, kProposed };

const char* decoder_name(DecoderKind kind);
std::optional<DecoderKind> decoder_from_name(const std::string& name);

/// Additions per round-trip iteration under the convention that a
/// minimum operation counts as one addition: 4 n log2 n for the polar
/// lattice, plus 2e per Tanner propagation direction for the
/// concatenated decoders. For SC decoding this is the per-frame f/g node
/// count, n log2 n.
std::uint64_t count_additions(DecoderKind kind, int n, int ldpc_edges);

struct StopRule {
    std::uint64_t max_frames = 1'000'000;
    std::uint64_t target_frame_errors = 100;
};

/// An immutable code + decoder bundle shared by all simulation workers.
struct SimCode {
    DecoderKind kind = DecoderKind::kBpd;
    PolarCodeSpec polar;              ///< used by kScd / kBpd
    std::optional<ConcatSpec> concat;  ///< used by kIcLdpc / kProposed

    int n() const;
    int payload_bits() const;
    double rate() const;
    int ldpc_edges() const;
};

/// Builds the code for a decoder kind: (n, k) polar for scd/bpd, an
/// (n, ng, dn) concatenation with a seeded regular (3,6) outer code for
/// the others.
SimCode make_sim_code(DecoderKind kind, int n, int k, int ng, int dn, double z0,
                      std::uint64_t ldpc_seed);

struct SnrRecord {
    double ebn0_db = 0.0;
    std::uint64_t frames = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t frame_errors = 0;
    double ber = 0.0;
    double fer = 0.0;
    double avg_iterations = 0.0;
    std::uint64_t additions_per_iteration = 0;
    double seconds = 0.0;
};

struct SimReport {
    DecoderKind decoder = DecoderKind::kBpd;
    int n = 0;
    int payload_bits = 0;
    double rate = 0.0;
    std::uint64_t seed = 0;
    int max_iters = 0;
    double alpha = 0.0;
    std::vector<SnrRecord> records;
};

/// Monte-Carlo sweep over the given Eb/N0 points. Per point, frames run
/// in deterministic batches until the stop rule is met; each frame draws
/// its payload and noise from a stream keyed by (seed, frame index), so
/// reports are identical for any thread count. Instrumented addition
/// counters are checked against count_additions every frame.
SimReport run_sweep(const SimCode& code, const std::vector<double>& snrs_db,
                    int max_iters, double alpha, const StopRule& stop,
                    std::uint64_t seed, int threads);

/// One row per record: decoder,n,k,rate,snr_db,frames,bit_errors,
/// frame_errors,ber,fer,avg_iters,adds_per_iter,seed. Floats carry nine
/// significant digits.
void write_csv(std::ostream& out, const SimReport& report);

struct WilsonInterval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Wilson score interval for a binomial proportion (default 95%).
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                               double z = 1.96);

}  // namespace fec
