// Command line front end: build general domain Toeplitz/Hankel matrices,
// certify rank/PSD, recover exponential sums and run discretization sweeps
// from JSON job specs.
//
// Exit codes: 0 success, 2 input parse error, 3 precondition violation,
// 4 verification failure, 5 numerical failure.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gendomain/gendomain.hpp"

namespace gd = gendomain;
using gd::json;

namespace {

struct Options {
    std::string spec_path;
    std::string out_path;
    double rank_tol = 1e-10;
    double psd_tol = 1e-10;
    double prune_tol = 1e-6;
    std::uint64_t seed = 0;
    std::vector<double> l_values;
};

json params_json(const Options& opt) {
    return {{"rank_tol", opt.rank_tol},
            {"psd_tol", opt.psd_tol},
            {"prune_tol", opt.prune_tol},
            {"seed", opt.seed}};
}

void emit(const Options& opt, const json& report) {
    std::string text = report.dump(2) + "\n";
    if (opt.out_path.empty())
        std::cout << text;
    else
        gd::write_text_file(opt.out_path, text);
}

gd::MatrixKind kind_from_job(const json& job) {
    std::string kind = job.value("kind", "toeplitz");
    if (kind == "toeplitz")
        return gd::MatrixKind::toeplitz;
    if (kind == "hankel")
        return gd::MatrixKind::hankel;
    throw gd::InvalidSpec("kind must be toeplitz or hankel");
}

std::vector<double> sweep_lengths(const json& job, const Options& opt) {
    if (!opt.l_values.empty())
        return opt.l_values;
    if (job.contains("l_values"))
        return job.at("l_values").get<std::vector<double>>();
    throw gd::InvalidSpec("no sampling lengths given (l_values or --l-values)");
}

/// The symbol field sampled on Omega = Xi -+ Ups, or an explicit field.
gd::SampledField job_field(const json& job, const gd::GridDomain& xi, const gd::GridDomain& ups,
                           gd::MatrixKind kind) {
    if (job.contains("field"))
        return gd::field_from_json(job.at("field"));
    gd::Symbol sym = gd::symbol_from_json(job.at("symbol"));
    gd::GridDomain omega = gd::minkowski(xi, ups,
                                         kind == gd::MatrixKind::hankel
                                             ? gd::MinkowskiSign::plus
                                             : gd::MinkowskiSign::minus);
    return gd::sample(sym, omega);
}

gd::GridDomain job_grid(const json& job, const char* key, double l) {
    return gd::lattice_points(gd::domain_spec_from_json(job.at(key)), l);
}

gd::GeneralDomainMatrix job_matrix(const json& job) {
    double l = job.value("l", 1.0);
    gd::MatrixKind kind = kind_from_job(job);
    gd::GridDomain xi = job_grid(job, "xi", l);
    gd::GridDomain ups = job_grid(job, "ups", l);
    gd::SampledField f = job_field(job, xi, ups, kind);
    return kind == gd::MatrixKind::toeplitz ? gd::build_toeplitz(f, xi, ups)
                                            : gd::build_hankel(f, xi, ups);
}

int cmd_build(const json& job, const Options& opt) {
    gd::GeneralDomainMatrix m = job_matrix(job);
    if (opt.out_path.empty())
        throw gd::InvalidSpec("build requires --out");
    gd::write_text_file(opt.out_path, gd::matrix_to_csv(m));
    json header = gd::matrix_header_json(m);
    header["job"] = job;
    header["params"] = params_json(opt);
    gd::write_text_file(opt.out_path + ".meta.json", header.dump(2) + "\n");
    return 0;
}

int cmd_analyze(const json& job, const Options& opt) {
    gd::GeneralDomainMatrix m = job_matrix(job);
    gd::SpectralReport rep = gd::analyze(m, opt.rank_tol, opt.psd_tol);
    json out = gd::to_json(rep);
    out["job"] = job;
    out["params"] = params_json(opt);
    emit(opt, out);
    return 0;
}

int cmd_recover(const json& job, const Options& opt) {
    gd::SampledField f = [&] {
        if (job.contains("field"))
            return gd::field_from_json(job.at("field"));
        gd::Symbol sym = gd::symbol_from_json(job.at("symbol"));
        double l = job.value("l", 1.0);
        return gd::sample(sym, job_grid(job, "xi", l));
    }();
    gd::RecoveryResult r = gd::cf_recover_md(f, opt.rank_tol, opt.prune_tol);
    json out = gd::to_json(r, opt.rank_tol, opt.prune_tol);
    out["job"] = job;
    out["params"] = params_json(opt);
    emit(opt, out);
    return 0;
}

int cmd_sweep_rank(const json& job, const Options& opt) {
    gd::Symbol sym = gd::symbol_from_json(job.at("symbol"));
    gd::DomainSpec xi = gd::domain_spec_from_json(job.at("xi"));
    gd::DomainSpec ups = gd::domain_spec_from_json(job.at("ups"));
    gd::SweepReport rep = gd::rank_sweep(sym, xi, ups, sweep_lengths(job, opt),
                                         kind_from_job(job), opt.rank_tol);
    if (!opt.out_path.empty() && opt.out_path.ends_with(".csv")) {
        gd::write_text_file(opt.out_path, gd::sweep_to_csv(rep));
        return 0;
    }
    json out = gd::to_json(rep);
    out["job"] = job;
    out["params"] = params_json(opt);
    emit(opt, out);
    return 0;
}

int cmd_sweep_norm(const json& job, const Options& opt) {
    gd::Symbol sym = gd::symbol_from_json(job.at("symbol"));
    gd::DomainSpec spec = gd::domain_spec_from_json(job.at("xi"));
    std::vector<gd::BumpFunction> bumps;
    if (job.contains("test_functions")) {
        for (const auto& b : job.at("test_functions"))
            bumps.push_back({b.at("center").get<gd::RealVec>(), b.at("radius").get<double>(),
                             b.value("amplitude", 1.0)});
    } else {
        bumps = gd::default_test_functions(spec);
    }
    gd::SweepReport rep = gd::norm_convergence(sym, spec, sweep_lengths(job, opt), bumps);
    if (!opt.out_path.empty() && opt.out_path.ends_with(".csv")) {
        gd::write_text_file(opt.out_path, gd::sweep_to_csv(rep));
        return 0;
    }
    json out = gd::to_json(rep);
    out["job"] = job;
    out["params"] = params_json(opt);
    emit(opt, out);
    return 0;
}

int cmd_sweep_boundary(const json& job, const Options& opt) {
    gd::DomainSpec spec = gd::domain_spec_from_json(job.at("xi"));
    gd::SweepReport rep = gd::boundary_sweep(spec, sweep_lengths(job, opt));
    if (!opt.out_path.empty() && opt.out_path.ends_with(".csv")) {
        gd::write_text_file(opt.out_path, gd::sweep_to_csv(rep));
        return 0;
    }
    json out = gd::to_json(rep);
    out["job"] = job;
    out["params"] = params_json(opt);
    emit(opt, out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"General domain Toeplitz/Hankel matrices: build, certify, recover, sweep"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand name

    Options opt;
    app.add_option("--spec", opt.spec_path, "JSON job spec")->required();
    app.add_option("--out", opt.out_path, "output path (default: stdout)");
    app.add_option("--rank-tol", opt.rank_tol, "relative numerical rank tolerance");
    app.add_option("--psd-tol", opt.psd_tol, "PSD tolerance");
    app.add_option("--prune-tol", opt.prune_tol, "coefficient pruning tolerance");
    app.add_option("--seed", opt.seed, "seed recorded in reports");
    app.add_option("--l-values", opt.l_values, "sampling lengths, overrides the job spec")
        ->delimiter(',');

    auto* build = app.add_subcommand("build", "build a matrix, write CSV + JSON header");
    auto* analyze = app.add_subcommand("analyze", "build and spectrally certify a matrix");
    auto* recover = app.add_subcommand("recover", "multidimensional exponential-sum recovery");
    auto* sweep_rank = app.add_subcommand("sweep-rank", "rank across sampling lengths");
    auto* sweep_norm = app.add_subcommand("sweep-norm", "scaled operator-image convergence");
    auto* sweep_boundary = app.add_subcommand("sweep-boundary", "boundary cube statistics");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        json job = gd::read_json_file(opt.spec_path);
        if (build->parsed())
            return cmd_build(job, opt);
        if (analyze->parsed())
            return cmd_analyze(job, opt);
        if (recover->parsed())
            return cmd_recover(job, opt);
        if (sweep_rank->parsed())
            return cmd_sweep_rank(job, opt);
        if (sweep_norm->parsed())
            return cmd_sweep_norm(job, opt);
        if (sweep_boundary->parsed())
            return cmd_sweep_boundary(job, opt);
        return 2;
    } catch (const gd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.category());
    } catch (const json::exception& e) {
        std::cerr << "error: invalid job spec: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    }
}
