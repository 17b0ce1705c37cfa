#include "fec/simulate.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "fec/bp.hpp"
#include "fec/channel.hpp"
#include "fec/sc.hpp"

namespace fec {

const char* decoder_name(DecoderKind kind) {
    switch (kind) {
        case DecoderKind::kScd: return "scd";
        case DecoderKind::kBpd: return "bpd";
        case DecoderKind::kIcLdpc: return "ic-ldpc";
        case DecoderKind::kProposed: return "proposed";
    }
    return "?";
}

std::optional<DecoderKind> decoder_from_name(const std::string& name) {
    if (name == "scd") return DecoderKind::kScd;
    if (name == "bpd") return DecoderKind::kBpd;
    if (name == "ic-ldpc") return DecoderKind::kIcLdpc;
    if (name == "proposed") return DecoderKind::kProposed;
    return std::nullopt;
}

std::uint64_t count_additions(DecoderKind kind, int n, int ldpc_edges) {
    if (n < 1 || !std::has_single_bit(static_cast<unsigned>(n)))
        throw std::invalid_argument("code length must be a power of two");
    const std::uint64_t log2n = std::countr_zero(static_cast<unsigned>(n));
    switch (kind) {
        case DecoderKind::kScd:
            return static_cast<std::uint64_t>(n) * log2n;
        case DecoderKind::kBpd:
            return 4ull * n * log2n;
        case DecoderKind::kIcLdpc:
        case DecoderKind::kProposed:
            return 4ull * n * log2n + 2ull * ldpc_edges + 2ull * ldpc_edges;
    }
    return 0;
}

int SimCode::n() const {
    return concat.has_value() ? concat->polar.n : polar.n;
}

int SimCode::payload_bits() const {
    return concat.has_value() ? concat->payload_bits() : polar.k();
}

double SimCode::rate() const {
    if (concat.has_value()) return concat->rate_overall();
    return static_cast<double>(polar.k()) / polar.n;
}

int SimCode::ldpc_edges() const {
    return (concat.has_value() && concat->ldpc.has_value())
               ? concat->ldpc->tanner.edge_count()
               : 0;
}

SimCode make_sim_code(DecoderKind kind, int n, int k, int ng, int dn, double z0,
                      std::uint64_t ldpc_seed) {
    SimCode code;
    code.kind = kind;
    switch (kind) {
        case DecoderKind::kScd:
        case DecoderKind::kBpd:
            code.polar = PolarCodeSpec::construct(n, k, z0);
            break;
        case DecoderKind::kIcLdpc:
        case DecoderKind::kProposed: {
            std::optional<LdpcCodeSpec> outer;
            if (dn > 0) outer = construct_regular_ldpc(dn, dn / 2, ldpc_seed);
            const auto selection = kind == DecoderKind::kProposed
                                       ? BitSelection::kSmallLeafset
                                       : BitSelection::kIntermediate;
            code.concat = ConcatSpec::make(n, ng, dn, selection, z0, std::move(outer));
            break;
        }
    }
    return code;
}

namespace {

struct FrameOutcome {
    std::uint64_t bit_errors = 0;
    bool frame_error = false;
    std::uint64_t iterations = 0;
    std::uint64_t additions_per_iteration = 0;
};

FrameOutcome run_frame(const SimCode& code, const ChannelConfig& cfg, int max_iters,
                       double alpha, std::uint64_t frame_index) {
    FrameRng rng(cfg.seed, frame_index);
    const int payload_bits = code.payload_bits();
    const BitVec payload = rng.bits(payload_bits);

    BitVec x;
    if (code.concat.has_value()) {
        x = concat_encode(payload, *code.concat);
    } else {
        BitVec u(code.polar.n, 0);
        for (int j = 0; j < code.polar.k(); ++j) u[code.polar.info_set[j]] = payload[j];
        x = polar_encode(u);
    }
    const std::vector<double> llr = bpsk_awgn(x, cfg, rng);

    FrameOutcome out;
    BitVec payload_hat;
    switch (code.kind) {
        case DecoderKind::kScd: {
            const ScResult r = scd_decode(llr, code.polar);
            payload_hat.resize(payload_bits);
            for (int j = 0; j < payload_bits; ++j)
                payload_hat[j] = r.u_hat[code.polar.info_set[j]];
            out.iterations = 1;
            out.additions_per_iteration = r.additions;
            break;
        }
        case DecoderKind::kBpd: {
            const BpResult r = bpd_decode(llr, code.polar, max_iters, alpha);
            payload_hat.resize(payload_bits);
            for (int j = 0; j < payload_bits; ++j)
                payload_hat[j] = r.u_hat[code.polar.info_set[j]];
            out.iterations = r.iterations;
            out.additions_per_iteration = r.lattice_additions.front();
            for (std::uint64_t a : r.lattice_additions)
                if (a != out.additions_per_iteration)
                    throw std::logic_error("uneven per-iteration addition count");
            break;
        }
        case DecoderKind::kIcLdpc:
        case DecoderKind::kProposed: {
            const ConcatResult r = concat_decode(llr, *code.concat, max_iters, alpha);
            payload_hat = r.payload_hat;
            out.iterations = r.iterations;
            out.additions_per_iteration = r.additions.front();
            for (std::uint64_t a : r.additions)
                if (a != out.additions_per_iteration)
                    throw std::logic_error("uneven per-iteration addition count");
            break;
        }
    }

    for (int j = 0; j < payload_bits; ++j)
        out.bit_errors += payload[j] != payload_hat[j];
    out.frame_error = out.bit_errors != 0;

    const std::uint64_t expected = count_additions(code.kind, code.n(), code.ldpc_edges());
    if (out.additions_per_iteration != expected)
        throw std::logic_error("instrumented addition count disagrees with the analytic one");
    return out;
}

}  // namespace

SimReport run_sweep(const SimCode& code, const std::vector<double>& snrs_db,
                    int max_iters, double alpha, const StopRule& stop,
                    std::uint64_t seed, int threads) {
    if (snrs_db.empty()) throw std::invalid_argument("need at least one SNR point");
    if (max_iters < 1) throw std::invalid_argument("max_iters must be at least 1");
    if (stop.max_frames < 1) throw std::invalid_argument("max_frames must be at least 1");
    if (threads < 1) threads = 1;

    SimReport report;
    report.decoder = code.kind;
    report.n = code.n();
    report.payload_bits = code.payload_bits();
    report.rate = code.rate();
    report.seed = seed;
    report.max_iters = max_iters;
    report.alpha = alpha;

    for (double snr : snrs_db) {
        ChannelConfig cfg;
        cfg.ebn0_db = snr;
        cfg.code_rate = code.rate();
        cfg.seed = seed;

        SnrRecord rec;
        rec.ebn0_db = snr;
        const auto start = std::chrono::steady_clock::now();
        std::uint64_t iter_sum = 0;

        std::uint64_t next_frame = 0;
        const std::uint64_t batch = static_cast<std::uint64_t>(threads) * 64;
        while (next_frame < stop.max_frames) {
            if (stop.target_frame_errors > 0 && rec.frame_errors >= stop.target_frame_errors)
                break;
            const std::uint64_t begin = next_frame;
            const std::uint64_t end = std::min(begin + batch, stop.max_frames);
            next_frame = end;

            struct WorkerTally {
                std::uint64_t bit_errors = 0;
                std::uint64_t frame_errors = 0;
                std::uint64_t iterations = 0;
                std::uint64_t additions_per_iteration = 0;
            };
            std::vector<WorkerTally> partial(threads);
            std::vector<std::exception_ptr> errors(threads);
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t) {
                pool.emplace_back([&, t] {
                    try {
                        for (std::uint64_t f = begin + t; f < end; f += threads) {
                            const FrameOutcome one = run_frame(code, cfg, max_iters, alpha, f);
                            partial[t].bit_errors += one.bit_errors;
                            partial[t].frame_errors += one.frame_error ? 1 : 0;
                            partial[t].iterations += one.iterations;
                            partial[t].additions_per_iteration = one.additions_per_iteration;
                        }
                    } catch (...) {
                        errors[t] = std::current_exception();
                    }
                });
            }
            for (auto& th : pool) th.join();
            for (auto& e : errors)
                if (e) std::rethrow_exception(e);
            for (int t = 0; t < threads; ++t) {
                rec.bit_errors += partial[t].bit_errors;
                rec.frame_errors += partial[t].frame_errors;
                iter_sum += partial[t].iterations;
                if (partial[t].additions_per_iteration != 0)
                    rec.additions_per_iteration = partial[t].additions_per_iteration;
            }
            rec.frames = end;
        }

        rec.ber = static_cast<double>(rec.bit_errors) /
                  (static_cast<double>(rec.frames) * code.payload_bits());
        rec.fer = static_cast<double>(rec.frame_errors) / static_cast<double>(rec.frames);
        rec.avg_iterations = static_cast<double>(iter_sum) / static_cast<double>(rec.frames);
        rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.records.push_back(rec);
    }
    return report;
}

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

}  // namespace

void write_csv(std::ostream& out, const SimReport& report) {
    out << "decoder,n,k,rate,snr_db,frames,bit_errors,frame_errors,ber,fer,"
           "avg_iters,adds_per_iter,seed\n";
    for (const SnrRecord& r : report.records) {
        out << decoder_name(report.decoder) << ',' << report.n << ',' << report.payload_bits
            << ',' << fmt_double(report.rate) << ',' << fmt_double(r.ebn0_db) << ','
            << r.frames << ',' << r.bit_errors << ',' << r.frame_errors << ','
            << fmt_double(r.ber) << ',' << fmt_double(r.fer) << ','
            << fmt_double(r.avg_iterations) << ',' << r.additions_per_iteration << ','
            << report.seed << '\n';
    }
}

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
    if (trials == 0) return {0.0, 1.0};
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

}  // namespace fec
