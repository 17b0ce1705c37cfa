// Command-line front end: construct codes, run AWGN sweeps, emit CSV.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fec/concat.hpp"
#include "fec/simulate.hpp"

namespace {

struct Options {
    std::string decoder = "bpd";
    int n = 1024;
    int k = -1;   // scd/bpd information bits; defaults to n/2
    int ng = -1;  // concatenated: unprotected good-channel bits; defaults to 15n/32
    int dn = -1;  // concatenated: outer-coded bits; defaults to n/16
    int iters = 60;
    double alpha = 0.9375;
    double z0 = 0.5;
    std::uint64_t ldpc_seed = 1;
    std::uint64_t seed = 1;
    int threads = 0;

    std::vector<double> snrs;
    std::string snr_range;
    std::uint64_t max_frames = 1'000'000;
    std::uint64_t target_errors = 100;
    std::string out_path;
    std::string alist_path;
};

fec::DecoderKind parse_decoder(const std::string& name) {
    const auto kind = fec::decoder_from_name(name);
    if (!kind.has_value())
        throw std::invalid_argument("unknown decoder '" + name + "'");
    return *kind;
}

void fill_defaults(Options& opt) {
    if (opt.k < 0) opt.k = opt.n / 2;
    if (opt.ng < 0) opt.ng = 15 * opt.n / 32;
    if (opt.dn < 0) opt.dn = opt.n / 16;
    if (opt.threads <= 0)
        opt.threads = std::max(1u, std::thread::hardware_concurrency());
}

std::vector<double> resolve_snrs(const Options& opt) {
    std::vector<double> snrs = opt.snrs;
    if (!opt.snr_range.empty()) {
        double start = 0, stop = 0, step = 0;
        if (std::sscanf(opt.snr_range.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3 ||
            step <= 0)
            throw std::invalid_argument("--snr-range expects start:stop:step with step > 0");
        for (double s = start; s <= stop + 1e-9; s += step) snrs.push_back(s);
    }
    if (snrs.empty()) snrs = {1.0, 1.5, 2.0, 2.5, 3.0, 3.5};
    return snrs;
}

fec::SimCode build_code(const Options& opt) {
    const fec::DecoderKind kind = parse_decoder(opt.decoder);
    return fec::make_sim_code(kind, opt.n, opt.k, opt.ng, opt.dn, opt.z0, opt.ldpc_seed);
}

int cmd_construct(const Options& opt) {
    const fec::SimCode code = build_code(opt);
    nlohmann::json j;
    if (code.concat.has_value()) {
        j = nlohmann::json::parse(code.concat->describe_json());
        j["ldpc_seed"] = opt.ldpc_seed;
    } else {
        const fec::PolarCodeSpec& p = code.polar;
        j["n"] = p.n;
        j["k"] = p.k();
        j["rate"] = static_cast<double>(p.k()) / p.n;
        j["info_set"] = p.info_set;
        nlohmann::json detail = nlohmann::json::array();
        for (int i : p.info_set)
            detail.push_back({{"index", i},
                              {"row_weight", p.row_weight[i]},
                              {"reliability", p.reliability[i]}});
        j["info_detail"] = detail;
    }
    j["decoder"] = opt.decoder;
    j["z0"] = opt.z0;

    if (!opt.alist_path.empty()) {
        if (!code.concat.has_value() || !code.concat->ldpc.has_value())
            throw std::invalid_argument("--alist-out needs a concatenated decoder");
        std::ofstream alist(opt.alist_path);
        if (!alist) throw std::runtime_error("cannot open " + opt.alist_path);
        alist << code.concat->ldpc->tanner.to_alist();
    }

    if (opt.out_path.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::ofstream out(opt.out_path);
        if (!out) throw std::runtime_error("cannot open " + opt.out_path);
        out << j.dump(2) << '\n';
    }
    return 0;
}

int cmd_simulate(const Options& opt) {
    const fec::SimCode code = build_code(opt);
    const std::vector<double> snrs = resolve_snrs(opt);
    fec::StopRule stop;
    stop.max_frames = opt.max_frames;
    stop.target_frame_errors = opt.target_errors;

    const fec::SimReport report =
        fec::run_sweep(code, snrs, opt.iters, opt.alpha, stop, opt.seed, opt.threads);

    for (const fec::SnrRecord& r : report.records) {
        std::printf("%-8s Eb/N0=%.2f dB  frames=%llu  fer=%.3e  ber=%.3e  adds/iter=%llu  (%.1fs)\n",
                    fec::decoder_name(report.decoder), r.ebn0_db,
                    static_cast<unsigned long long>(r.frames), r.fer, r.ber,
                    static_cast<unsigned long long>(r.additions_per_iteration), r.seconds);
    }

    if (opt.out_path.empty()) {
        fec::write_csv(std::cout, report);
    } else {
        std::ofstream out(opt.out_path);
        if (!out) throw std::runtime_error("cannot open " + opt.out_path);
        fec::write_csv(out, report);
    }
    return 0;
}

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--decoder", opt.decoder, "scd, bpd, ic-ldpc or proposed")
        ->default_val("bpd");
    cmd->add_option("--n", opt.n, "polar code length (power of two)")->default_val(1024);
    cmd->add_option("--k", opt.k, "information bits for scd/bpd (default n/2)");
    cmd->add_option("--ng", opt.ng, "unprotected information bits (default 15n/32)");
    cmd->add_option("--dn", opt.dn, "outer-coded information bits (default n/16)");
    cmd->add_option("--iters", opt.iters, "decoding iterations")->default_val(60);
    cmd->add_option("--alpha", opt.alpha, "min-sum scaling factor")->default_val(0.9375);
    cmd->add_option("--z0", opt.z0, "erasure design parameter")->default_val(0.5);
    cmd->add_option("--ldpc-seed", opt.ldpc_seed, "outer-code construction seed")
        ->default_val(1);
    cmd->add_option("-o,--out", opt.out_path, "output file (stdout when omitted)");
    cmd->set_config("--config");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polar / concatenated LDPC-polar coding simulator"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* construct = app.add_subcommand("construct", "dump a code construction");
    add_common(construct, opt);
    construct->add_option("--alist-out", opt.alist_path, "write the outer H in alist form");

    CLI::App* simulate = app.add_subcommand("simulate", "run an AWGN Monte-Carlo sweep");
    add_common(simulate, opt);
    simulate->add_option("--snr", opt.snrs, "Eb/N0 points in dB");
    simulate->add_option("--snr-range", opt.snr_range, "start:stop:step in dB");
    simulate->add_option("--max-frames", opt.max_frames, "frame budget per SNR")
        ->default_val(1'000'000);
    simulate->add_option("--target-errors", opt.target_errors,
                         "stop after this many frame errors (0 = run the full budget)")
        ->default_val(100);
    simulate->add_option("--seed", opt.seed, "simulation master seed")->default_val(1);
    simulate->add_option("--threads", opt.threads, "worker threads (default: all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        fill_defaults(opt);
        if (construct->parsed()) return cmd_construct(opt);
        return cmd_simulate(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
