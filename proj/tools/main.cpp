// pangular CLI: bound sweeps, violation certification, equal-norm dilation
// tests and f(p) extremum profiles over the norm families in core/.
//
// Exit codes: 0 success / no violation, 2 violation found (certify and lorch
// only), 1 usage or config error. All randomness derives from --seed;
// identical argv produces byte-identical output for any --threads value.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pangular/bounds.hpp"
#include "pangular/certify.hpp"
#include "pangular/extremum.hpp"
#include "pangular/norm.hpp"
#include "pangular/sweep.hpp"
#include "report.hpp"

namespace {

using namespace pangular;
using cli::Format;

NormSpec parse_norm(const std::string& text, int dim, bool dim_given) {
    NormSpec spec = NormSpec::parse(text, dim);
    if (dim_given && spec.dim() != dim) {
        throw std::invalid_argument("--dim " + std::to_string(dim) + " conflicts with '" + text +
                                    "' (dimension " + std::to_string(spec.dim()) + ")");
    }
    return spec;
}

std::vector<double> parse_double_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::string_view rest = text;
    while (!rest.empty()) {
        const std::size_t comma = rest.find(',');
        const std::string tok(rest.substr(0, comma));
        try {
            std::size_t used = 0;
            const double v = std::stod(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": malformed number '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        rest = rest.substr(comma + 1);
    }
    if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
    return out;
}

std::vector<double> uniform_grid(int points) {
    if (points < 2) throw std::invalid_argument("--p-grid must be >= 2");
    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        grid[static_cast<std::size_t>(i)] = static_cast<double>(i) / (points - 1);
    }
    return grid;
}

void emit(const std::string& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(report.data(), 1, report.size(), stdout);
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file '" + out_path + "'");
    f.write(report.data(), static_cast<std::streamsize>(report.size()));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-angular distance bounds and inner-product-space certification"};
    app.require_subcommand(1);

    std::string norm = "l2";
    int dim = 2;
    std::uint64_t seed = 1;
    std::string format = "json";
    std::string out_path;
    int threads = 1;

    double p = 0.0, q = 1.0;
    int restarts = 50, steps = 2000;
    long long budget = 10000;
    int samples = 10000;
    int p_grid_points = 21;
    std::string q_set = "0.25,0.5,1,2,5";
    double a = 0.0, b = 0.0;
    int grid_size = 1001;
    double tol = 1e-10;
    int axiom_samples = 1000;

    auto add_common = [&](CLI::App* cmd, bool with_norm) {
        if (with_norm) {
            cmd->add_option("--norm", norm, "norm spec: l1|l2|linf|lq:<q>|wl2:<w,...>");
            cmd->add_option("--dim", dim, "dimension for the scalar norm kinds (default 2)");
        }
        cmd->add_option("--seed", seed, "seed for all randomness (default 1)");
        cmd->add_option("--format", format, "output format: json|csv|human (default json)");
        cmd->add_option("--out", out_path, "write the report to this path instead of stdout");
        return cmd;
    };

    CLI::App* c_bounds = add_common(app.add_subcommand(
        "check-bounds", "sweep every bound kind over seeded pairs and flag ratio violations"),
        true);
    std::string kind_filter;
    c_bounds->add_option("--p-grid", p_grid_points, "number of p values on [0,1] (default 21)");
    c_bounds->add_option("--q-set", q_set, "comma-separated q values (default 0.25,0.5,1,2,5)");
    c_bounds->add_option("--samples", samples, "seeded pairs per sweep (default 10000)");
    c_bounds->add_option("--kind", kind_filter,
                         "only report this bound kind: maligranda|dw:<q>|ips|char:<q>");
    c_bounds->add_option("--threads", threads, "internal parallelism; output is unaffected");

    CLI::App* c_certify = add_common(app.add_subcommand(
        "certify", "search for a pair violating the characterizing bound char:<q>"), true);
    c_certify->add_option("--p", p, "p exponent in [0,1) (default 0)");
    c_certify->add_option("--q", q, "q exponent in (0,1]; above 1 the verdict would be unsound");
    c_certify->add_option("--restarts", restarts, "search restarts (default 50)");
    c_certify->add_option("--steps", steps, "objective evaluations per restart (default 2000)");
    c_certify->add_option("--threads", threads, "internal parallelism; output is unaffected");

    CLI::App* c_lorch = add_common(app.add_subcommand(
        "lorch", "equal-norm dilation test: ||x+y|| <= ||gx + y/g|| over seeded pairs"), true);
    c_lorch->add_option("--budget", budget, "number of seeded pairs (default 10000)");

    CLI::App* c_profile = add_common(app.add_subcommand(
        "fp-profile", "profile f(p) for normalized coordinates (a, b) and locate its "
                      "interior critical point (a above ~1e6 risks overflow in a^(1+p))"),
        false);
    c_profile->add_option("--a", a, "a = ||y||/||x||, must be > 1")->required();
    c_profile->add_option("--b", b, "b = ||x-y||^2/||x||^2 in [(a-1)^2, (a+1)^2]")->required();
    c_profile->add_option("--grid", grid_size, "profile grid size (default 1001)");
    c_profile->add_option("--tol", tol, "bisection bracket tolerance (default 1e-10)");

    CLI::App* c_validate = add_common(app.add_subcommand(
        "validate-norm", "seeded spot-check of the norm axioms"), true);
    c_validate->add_option("--samples", axiom_samples, "sample count (default 1000)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        const Format fmt = cli::parse_format(format);
        const auto norm_arg = [&](CLI::App* sub) {
            return parse_norm(norm, dim, sub->count("--dim") > 0);
        };

        if (app.got_subcommand(c_bounds)) {
            const NormSpec spec = norm_arg(c_bounds);
            std::vector<double> qs = parse_double_list(q_set, "--q-set");
            std::string canon_kind;
            if (!kind_filter.empty()) {
                const BoundKind kind = BoundKind::parse(kind_filter);
                canon_kind = kind.to_string();
                if (kind.has_q() &&
                    std::find(qs.begin(), qs.end(), kind.q()) == qs.end()) {
                    qs.push_back(kind.q());
                }
            }
            auto rows = run_bounds_sweep(spec, uniform_grid(p_grid_points), qs, samples, seed,
                                         threads);
            if (!canon_kind.empty()) {
                std::erase_if(rows, [&](const SweepRow& r) { return r.kind != canon_kind; });
            }
            switch (fmt) {
                case Format::Json: emit(cli::sweep_json(rows), out_path); break;
                case Format::Csv: emit(cli::sweep_csv(rows), out_path); break;
                case Format::Human: emit(cli::sweep_human(rows), out_path); break;
            }
            return 0;
        }

        if (app.got_subcommand(c_certify)) {
            const NormSpec spec = norm_arg(c_certify);
            SearchConfig cfg;
            cfg.p = p;
            cfg.q = q;
            cfg.restarts = restarts;
            cfg.steps_per_restart = steps;
            cfg.seed = seed;
            cfg.threads = threads;
            const CertifyResult res = certify_ips(spec, cfg);
            switch (fmt) {
                case Format::Json: emit(cli::certify_json(res, spec, p, q), out_path); break;
                case Format::Csv: emit(cli::certify_csv(res, spec, p, q), out_path); break;
                case Format::Human: emit(cli::certify_human(res, spec, p, q), out_path); break;
            }
            return res.verdict == Verdict::NotInnerProduct ? 2 : 0;
        }

        if (app.got_subcommand(c_lorch)) {
            const NormSpec spec = norm_arg(c_lorch);
            const LorchOutcome oc = lorch_test(spec, budget, seed);
            switch (fmt) {
                case Format::Json: emit(cli::lorch_json(oc, spec, budget), out_path); break;
                case Format::Csv: emit(cli::lorch_csv(oc, spec, budget), out_path); break;
                case Format::Human: emit(cli::lorch_human(oc, spec), out_path); break;
            }
            return oc.found() ? 2 : 0;
        }

        if (app.got_subcommand(c_profile)) {
            const FpProfile prof = fp_profile(NormalizedPair(a, b), grid_size, tol);
            switch (fmt) {
                case Format::Json: emit(cli::profile_json(prof), out_path); break;
                case Format::Csv: emit(cli::profile_csv(prof), out_path); break;
                case Format::Human: emit(cli::profile_human(prof), out_path); break;
            }
            return 0;
        }

        if (app.got_subcommand(c_validate)) {
            const NormSpec spec = norm_arg(c_validate);
            const AxiomReport rep = validate_norm_axioms(spec, axiom_samples, seed);
            switch (fmt) {
                case Format::Json: emit(cli::axioms_json(rep, spec, seed), out_path); break;
                case Format::Csv: emit(cli::axioms_csv(rep), out_path); break;
                case Format::Human: emit(cli::axioms_human(rep, spec), out_path); break;
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
