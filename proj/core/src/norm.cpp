#include "pangular/norm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <charconv>
#include <stdexcept>

#include "pangular/rng.hpp"

namespace pangular {

namespace {

double parse_strict_double(std::string_view s, const char* what) {
    double out = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc() || res.ptr != last || !std::isfinite(out)) {
        throw std::invalid_argument(std::string(what) + ": malformed number '" + std::string(s) +
                                    "'");
    }
    return out;
}

std::string fmt_short(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

NormSpec::NormSpec(NormKind kind, double q, std::vector<double> weights, int dim)
    : kind_(kind), q_(q), weights_(std::move(weights)), dim_(dim) {}

NormSpec NormSpec::lq(double q, int dim) {
    if (dim < 1) throw std::invalid_argument("NormSpec: dimension must be positive");
    if (!std::isfinite(q) || q < 1.0) {
        throw std::invalid_argument(
            "NormSpec: Lq requires q >= 1 (the triangle inequality fails below)");
    }
    return NormSpec(NormKind::Lq, q, {}, dim);
}

NormSpec NormSpec::linf(int dim) {
    if (dim < 1) throw std::invalid_argument("NormSpec: dimension must be positive");
    return NormSpec(NormKind::LInf, 0.0, {}, dim);
}

NormSpec NormSpec::weighted_l2(std::vector<double> weights) {
    if (weights.empty()) throw std::invalid_argument("NormSpec: wl2 needs at least one weight");
    for (double w : weights) {
        if (!std::isfinite(w) || w <= 0.0) {
            throw std::invalid_argument("NormSpec: wl2 weights must be finite and positive");
        }
    }
    const int dim = static_cast<int>(weights.size());
    return NormSpec(NormKind::WeightedL2, 0.0, std::move(weights), dim);
}

double NormSpec::q() const {
    if (kind_ != NormKind::Lq) throw std::logic_error("NormSpec: q() on a non-Lq spec");
    return q_;
}

const std::vector<double>& NormSpec::weights() const {
    if (kind_ != NormKind::WeightedL2) {
        throw std::logic_error("NormSpec: weights() on a non-wl2 spec");
    }
    return weights_;
}

bool NormSpec::is_inner_product() const {
    return kind_ == NormKind::WeightedL2 || (kind_ == NormKind::Lq && q_ == 2.0);
}

NormSpec NormSpec::parse(std::string_view text, int dim) {
    if (text == "l1") return l1(dim);
    if (text == "l2") return l2(dim);
    if (text == "linf") return linf(dim);
    if (text.starts_with("lq:")) {
        return lq(parse_strict_double(text.substr(3), "NormSpec"), dim);
    }
    if (text.starts_with("wl2:")) {
        std::string_view rest = text.substr(4);
        std::vector<double> weights;
        while (!rest.empty()) {
            const std::size_t comma = rest.find(',');
            const std::string_view tok = rest.substr(0, comma);
            weights.push_back(parse_strict_double(tok, "NormSpec"));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
            if (rest.empty()) throw std::invalid_argument("NormSpec: trailing comma in wl2 list");
        }
        if (weights.empty()) throw std::invalid_argument("NormSpec: empty wl2 weight list");
        return weighted_l2(std::move(weights));
    }
    throw std::invalid_argument("NormSpec: unrecognized norm '" + std::string(text) +
                                "' (expected l1, l2, linf, lq:<q> or wl2:<w,...>)");
}

std::string NormSpec::to_string() const {
    switch (kind_) {
        case NormKind::LInf:
            return "linf";
        case NormKind::Lq:
            if (q_ == 1.0) return "l1";
            if (q_ == 2.0) return "l2";
            return "lq:" + fmt_short(q_);
        case NormKind::WeightedL2: {
            std::string out = "wl2:";
            for (std::size_t i = 0; i < weights_.size(); ++i) {
                if (i > 0) out += ",";
                out += fmt_short(weights_[i]);
            }
            return out;
        }
    }
    return "?";
}

double norm_eval(const NormSpec& spec, const Vec& v) {
    if (spec.dim() != v.dim()) {
        throw std::invalid_argument("norm_eval: dimension mismatch (spec " +
                                    std::to_string(spec.dim()) + ", vector " +
                                    std::to_string(v.dim()) + ")");
    }
    double m = 0.0;
    for (double c : v.coords()) m = std::max(m, std::fabs(c));
    if (m == 0.0) return 0.0;

    switch (spec.kind()) {
        case NormKind::LInf:
            return m;
        case NormKind::Lq: {
            const double q = spec.q();
            double s = 0.0;
            if (q == 1.0) {
                for (double c : v.coords()) s += std::fabs(c) / m;
                return m * s;
            }
            if (q == 2.0) {
                for (double c : v.coords()) {
                    const double d = c / m;
                    s += d * d;
                }
                return m * std::sqrt(s);
            }
            for (double c : v.coords()) s += std::pow(std::fabs(c) / m, q);
            return m * std::pow(s, 1.0 / q);
        }
        case NormKind::WeightedL2: {
            const auto& w = spec.weights();
            double s = 0.0;
            for (int i = 0; i < v.dim(); ++i) {
                const double d = v[i] / m;
                s += w[static_cast<std::size_t>(i)] * d * d;
            }
            return m * std::sqrt(s);
        }
    }
    throw std::logic_error("norm_eval: unreachable");
}

AxiomReport validate_norm_axioms(const NormSpec& spec, int sample_count, std::uint64_t seed) {
    if (sample_count < 1) throw std::invalid_argument("validate_norm_axioms: sample_count >= 1");

    constexpr double kRelTol = 1e-12;
    AxiomReport report;
    report.samples = sample_count;

    // Definiteness at the one point it can be checked exactly.
    const Vec zero(std::vector<double>(static_cast<std::size_t>(spec.dim()), 0.0));
    if (norm_eval(spec, zero) != 0.0) {
        report.failures.push_back({"definiteness", zero, zero, 0.0, norm_eval(spec, zero), 0.0});
    }

    Rng rng(seed);
    for (int i = 0; i < sample_count; ++i) {
        const Vec v = sample_nonzero_vec(rng, spec.dim());
        const Vec u = sample_nonzero_vec(rng, spec.dim());
        const double mag = rng.log_uniform(1e-3, 1e3);
        const double t = rng.uniform01() < 0.5 ? -mag : mag;

        const double nv = norm_eval(spec, v);
        const double nu = norm_eval(spec, u);
        if (!(nv >= 0.0) || (nv == 0.0) != v.is_zero()) {
            report.failures.push_back({"nonneg", v, u, 0.0, nv, 0.0});
        }

        const double lhs_h = norm_eval(spec, t * v);
        const double rhs_h = std::fabs(t) * nv;
        if (std::fabs(lhs_h - rhs_h) > kRelTol * std::max(lhs_h, rhs_h)) {
            report.failures.push_back({"homogeneity", v, u, t, lhs_h, rhs_h});
        }

        const double lhs_t = norm_eval(spec, u + v);
        const double rhs_t = nu + nv;
        if (lhs_t > rhs_t + kRelTol * rhs_t) {
            report.failures.push_back({"triangle", v, u, 0.0, lhs_t, rhs_t});
        }
    }
    return report;
}

}  // namespace pangular
