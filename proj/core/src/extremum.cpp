#include "pangular/extremum.hpp"

#include <cmath>
#include <cstdio>

namespace pangular {

namespace {

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// Sign changes of E over a uniform grid on [0, 1], plus the crossing
// brackets. Exact zeros on the grid do not break a run of equal signs.
struct SignScan {
    int changes = 0;
    std::vector<std::pair<double, double>> crossings;
};

SignScan scan_sign_changes(const NormalizedPair& pair, int grid_size) {
    SignScan scan;
    int last_sign = 0;
    double last_p = 0.0;
    for (int i = 0; i < grid_size; ++i) {
        const double p = static_cast<double>(i) / (grid_size - 1);
        const int s = sign_of(fp_derivative_surrogate(pair, p));
        if (s == 0) continue;
        if (last_sign != 0 && s != last_sign) {
            ++scan.changes;
            scan.crossings.emplace_back(last_p, p);
        }
        last_sign = s;
        last_p = p;
    }
    return scan;
}

}  // namespace

NormalizedPair::NormalizedPair(double a, double b) : a_(a), b_(b) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw std::invalid_argument("NormalizedPair: non-finite coordinate");
    }
    if (!(a > 1.0)) {
        throw std::invalid_argument("NormalizedPair: a = ||y||/||x|| must be > 1");
    }
    if (!(b >= (a - 1.0) * (a - 1.0) && b <= (a + 1.0) * (a + 1.0))) {
        throw std::invalid_argument(
            "NormalizedPair: b must lie in [(a-1)^2, (a+1)^2] (triangle inequality)");
    }
}

double fp_value(const NormalizedPair& pair, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("fp_value: p must lie in [0, 1]");
    }
    const double a = pair.a();
    const double g = std::pow(a, 1.0 - p);  // a^(1-p)
    const double u = (1.0 - g) / (1.0 + g);
    return u * u + (g + std::pow(a, 1.0 + p)) / pair.b();
}

double fp_derivative_surrogate(const NormalizedPair& pair, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("fp_derivative_surrogate: p must lie in [0, 1]");
    }
    const double a = pair.a();
    const double g = std::pow(a, 1.0 - p);
    const double h = 1.0 + g;
    return 4.0 * pair.b() * (1.0 - g) + (std::pow(a, 2.0 * p) - 1.0) * h * h * h;
}

falsification_error::falsification_error(const std::string& what, double a, double b,
                                         int sign_changes,
                                         std::vector<std::pair<double, double>> crossings)
    : std::runtime_error(what),
      a_(a),
      b_(b),
      sign_changes_(sign_changes),
      crossings_(std::move(crossings)) {}

ExtremumResult find_extremum(const NormalizedPair& pair, double tol, int sign_grid_size) {
    if (!(tol > 0.0 && tol <= 1e-3)) {
        throw std::invalid_argument("find_extremum: tol must lie in (0, 1e-3]");
    }
    if (sign_grid_size < 1001) sign_grid_size = 1001;

    const SignScan scan = scan_sign_changes(pair, sign_grid_size);
    if (scan.changes != 1) {
        char msg[256];
        std::snprintf(msg, sizeof msg,
                      "find_extremum: E has %d sign changes on the %d-point grid for a=%.17g "
                      "b=%.17g (expected exactly 1); uniqueness falsification candidate",
                      scan.changes, sign_grid_size, pair.a(), pair.b());
        throw falsification_error(msg, pair.a(), pair.b(), scan.changes, scan.crossings);
    }

    double lo = 0.0, hi = 1.0;
    double elo = fp_derivative_surrogate(pair, lo);
    const double ehi = fp_derivative_surrogate(pair, hi);
    if (!(elo < 0.0 && ehi > 0.0)) {
        char msg[256];
        std::snprintf(msg, sizeof msg,
                      "find_extremum: endpoint signs E(0)=%.17g, E(1)=%.17g contradict the "
                      "guaranteed bracket for a=%.17g b=%.17g",
                      elo, ehi, pair.a(), pair.b());
        throw falsification_error(msg, pair.a(), pair.b(), scan.changes, scan.crossings);
    }

    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double em = fp_derivative_surrogate(pair, mid);
        if (em == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((em < 0.0) == (elo < 0.0)) {
            lo = mid;
            elo = em;
        } else {
            hi = mid;
        }
    }

    ExtremumResult res;
    res.p0 = 0.5 * (lo + hi);
    res.bracket_lo = lo;
    res.bracket_hi = hi;
    res.sign_changes = scan.changes;
    return res;
}

BoundaryMaxReport fp_boundary_max_check(const NormalizedPair& pair, int grid_size) {
    if (grid_size < 101) {
        throw std::invalid_argument("fp_boundary_max_check: grid_size must be >= 101");
    }

    BoundaryMaxReport rep;
    rep.f0 = fp_value(pair, 0.0);
    rep.f1 = fp_value(pair, 1.0);
    rep.ceiling = (1.0 + pair.a() * pair.a()) / pair.b();

    rep.max_f = -1.0;
    for (int i = 0; i < grid_size; ++i) {
        const double p = static_cast<double>(i) / (grid_size - 1);
        const double f = fp_value(pair, p);
        if (f > rep.max_f) {
            rep.max_f = f;
            rep.argmax_p = p;
        }
    }

    const bool interior_below_boundary = rep.max_f <= std::max(rep.f0, rep.f1) + 1e-10;
    const bool boundary_ordered = rep.f0 <= rep.f1 + 1e-12;
    rep.pass = interior_below_boundary && boundary_ordered;
    if (!rep.pass) {
        char msg[320];
        std::snprintf(msg, sizeof msg,
                      "falsification candidate for a=%.17g b=%.17g: max f=%.17g at p=%.17g vs "
                      "f(0)=%.17g f(1)=%.17g (ceiling %.17g); checks: interior<=boundary %s, "
                      "f(0)<=f(1) %s",
                      pair.a(), pair.b(), rep.max_f, rep.argmax_p, rep.f0, rep.f1, rep.ceiling,
                      interior_below_boundary ? "ok" : "FAILED",
                      boundary_ordered ? "ok" : "FAILED");
        rep.detail = msg;
    }
    return rep;
}

FpProfile fp_profile(const NormalizedPair& pair, int grid_size, double tol) {
    if (grid_size < 2) throw std::invalid_argument("fp_profile: grid_size must be >= 2");

    FpProfile prof;
    prof.a = pair.a();
    prof.b = pair.b();
    prof.grid.reserve(static_cast<std::size_t>(grid_size));
    for (int i = 0; i < grid_size; ++i) {
        const double p = static_cast<double>(i) / (grid_size - 1);
        prof.grid.emplace_back(p, fp_value(pair, p));
    }
    prof.f0 = prof.grid.front().second;
    prof.f1 = prof.grid.back().second;
    prof.deriv_sign_at_0 = sign_of(fp_derivative_surrogate(pair, 0.0));
    prof.deriv_sign_at_1 = sign_of(fp_derivative_surrogate(pair, 1.0));

    const int sign_grid = std::max(grid_size, 1001);
    prof.sign_changes = scan_sign_changes(pair, sign_grid).changes;
    if (prof.sign_changes == 1) {
        prof.p0 = find_extremum(pair, tol, sign_grid).p0;
    }
    return prof;
}

}  // namespace pangular
