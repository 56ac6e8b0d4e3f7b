#include "pangular/bounds.hpp"

#include <cmath>
#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace pangular {

namespace {

constexpr double kDegenerateTol = 1e-12;  // ||x-y|| below this times max norm: no ratio

double parse_strict_double(std::string_view s, const char* what) {
    double out = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(out)) {
        throw std::invalid_argument(std::string(what) + ": malformed number '" + std::string(s) +
                                    "'");
    }
    return out;
}

}  // namespace

PExponent::PExponent(double p) : p_(p) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
        throw std::invalid_argument("PExponent: p must lie in [0, 1]");
    }
}

QExponent::QExponent(double q) : q_(q) {
    if (!std::isfinite(q) || q <= 0.0) {
        throw std::invalid_argument("QExponent: q must be strictly positive");
    }
}

double BoundKind::q() const {
    if (!has_q()) throw std::logic_error("BoundKind: q() on a q-free kind");
    return q_;
}

BoundKind BoundKind::parse(std::string_view text) {
    if (text == "maligranda") return maligranda();
    if (text == "ips") return ips();
    if (text.starts_with("dw:")) {
        return dw_general(QExponent(parse_strict_double(text.substr(3), "BoundKind")));
    }
    if (text.starts_with("char:")) {
        return characterizing(QExponent(parse_strict_double(text.substr(5), "BoundKind")));
    }
    throw std::invalid_argument("BoundKind: unrecognized kind '" + std::string(text) +
                                "' (expected maligranda, dw:<q>, ips or char:<q>)");
}

std::string BoundKind::to_string() const {
    char buf[48];
    switch (family_) {
        case Family::Maligranda:
            return "maligranda";
        case Family::Ips:
            return "ips";
        case Family::DwGeneral:
            std::snprintf(buf, sizeof buf, "dw:%.17g", q_);
            return buf;
        case Family::Characterizing:
            std::snprintf(buf, sizeof buf, "char:%.17g", q_);
            return buf;
    }
    return "?";
}

PairGeometry pair_geometry(const NormSpec& spec, const Vec& x, const Vec& y) {
    PairGeometry g;
    g.nx = norm_eval(spec, x);
    g.ny = norm_eval(spec, y);
    if (g.nx == 0.0 || g.ny == 0.0) {
        throw std::invalid_argument("pair_geometry: zero vector (both arguments must be nonzero)");
    }
    g.t = std::max(g.nx, g.ny);
    g.nxs = g.nx / g.t;
    g.nys = g.ny / g.t;
    g.dn = norm_eval(spec, x - y) / g.t;
    return g;
}

double alpha_p_scaled(const NormSpec& spec, const Vec& x, const Vec& y, const PairGeometry& g,
                      double p) {
    // alpha_p(x, y) = t^p alpha_p(x/t, y/t); the scaled evaluation keeps all
    // powers in (0, 1] so extreme magnitudes cannot overflow.
    const double cx = std::pow(g.nxs, p - 1.0) / g.t;
    const double cy = std::pow(g.nys, p - 1.0) / g.t;
    std::vector<double> d(static_cast<std::size_t>(x.dim()));
    for (int i = 0; i < x.dim(); ++i) {
        d[static_cast<std::size_t>(i)] = x[i] * cx - y[i] * cy;
    }
    return norm_eval(spec, Vec(std::move(d)));
}

double bound_core(const PairGeometry& g, double p, const BoundKind& kind) {
    switch (kind.family()) {
        case BoundKind::Family::Maligranda:
            // max(nxs, nys) == 1 after the joint rescale.
            return (2.0 - p) * g.dn;
        case BoundKind::Family::Ips:
            return 2.0 * g.dn / (std::pow(g.nxs, 1.0 - p) + std::pow(g.nys, 1.0 - p));
        case BoundKind::Family::DwGeneral: {
            const double q = kind.q();
            const double s = std::pow(g.nxs, (1.0 - p) * q) + std::pow(g.nys, (1.0 - p) * q);
            return std::pow(2.0, 1.0 + 1.0 / q) * g.dn / std::pow(s, 1.0 / q);
        }
        case BoundKind::Family::Characterizing: {
            const double q = kind.q();
            const double s = std::pow(g.nxs, (1.0 - p) * q) + std::pow(g.nys, (1.0 - p) * q);
            return std::pow(2.0, 1.0 / q) * g.dn / std::pow(s, 1.0 / q);
        }
    }
    throw std::logic_error("bound_core: unreachable");
}

double p_angular_distance(const NormSpec& spec, const Vec& x, const Vec& y, PExponent p) {
    const PairGeometry g = pair_geometry(spec, x, y);
    return std::pow(g.t, p.value()) * alpha_p_scaled(spec, x, y, g, p.value());
}

double angle(const NormSpec& spec, const Vec& x, const Vec& y) {
    const double a0 = p_angular_distance(spec, x, y, PExponent(0.0));
    double arg = 0.5 * (2.0 - a0 * a0);
    if (arg > 1.0 || arg < -1.0) {
        if (arg > 1.0 + 1e-12 || arg < -1.0 - 1e-12) {
            throw std::domain_error(
                "angle: arccos argument " + std::to_string(arg) +
                " leaves [-1, 1] beyond tolerance; the norm breaks the angle formula");
        }
        arg = arg > 1.0 ? 1.0 : -1.0;
    }
    return std::acos(arg);
}

double bound_value(const NormSpec& spec, const Vec& x, const Vec& y, PExponent p,
                   const BoundKind& kind) {
    const PairGeometry g = pair_geometry(spec, x, y);
    return std::pow(g.t, p.value()) * bound_core(g, p.value(), kind);
}

BoundReport bound_report(const NormSpec& spec, const Vec& x, const Vec& y, PExponent p,
                         const BoundKind& kind) {
    if (x == y) {
        throw std::invalid_argument("bound_report: x == y (the ratio would be 0/0)");
    }
    const PairGeometry g = pair_geometry(spec, x, y);

    BoundReport rep;
    rep.p = p.value();
    if (kind.has_q()) rep.q = kind.q();
    rep.kind = kind.to_string();

    const double tp = std::pow(g.t, p.value());
    rep.alpha_p = tp * alpha_p_scaled(spec, x, y, g, p.value());
    rep.bound = tp * bound_core(g, p.value(), kind);
    if (g.dn < kDegenerateTol) {
        rep.degenerate = true;
        return rep;
    }
    rep.ratio = rep.alpha_p / rep.bound;
    return rep;
}

double l1_expansion_alpha_sq(const NormSpec& spec, const Vec& x, const Vec& y, PExponent pe) {
    if (!spec.is_inner_product()) {
        throw std::invalid_argument(
            "l1_expansion_alpha_sq: the polarization expansion needs an inner-product norm");
    }
    const double p = pe.value();
    const double nx = norm_eval(spec, x);
    const double ny = norm_eval(spec, y);
    if (nx == 0.0 || ny == 0.0) {
        throw std::invalid_argument("l1_expansion_alpha_sq: zero vector");
    }
    const double nd = norm_eval(spec, x - y);
    return std::pow(nx, 2.0 * p) -
           (nx * nx + ny * ny - nd * nd) / (std::pow(nx, 1.0 - p) * std::pow(ny, 1.0 - p)) +
           std::pow(ny, 2.0 * p);
}

}  // namespace pangular
