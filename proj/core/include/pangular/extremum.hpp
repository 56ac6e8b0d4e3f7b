#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pangular {

// Normalized coordinates of a nonzero pair with ||x|| < ||y||:
//   a = ||y|| / ||x|| > 1,   b = ||x - y||^2 / ||x||^2.
// The triangle inequality confines b to [(a-1)^2, (a+1)^2]. Every pair of
// vectors with unequal norms maps onto these two scalars, which is the whole
// state the f(p) analysis depends on. Values of a above ~1e6 are accepted but
// generated test pairs cap a there (a^(1+p) grows quickly).
class NormalizedPair {
public:
    NormalizedPair(double a, double b);

    double a() const { return a_; }
    double b() const { return b_; }

private:
    double a_, b_;
};

// f(p) = ((1 - a^(1-p)) / (1 + a^(1-p)))^2 + (a^(1-p) + a^(1+p)) / b
// for p in [0, 1]. f(1) = (1 + a^2)/b and
// f(1) - f(0) = (a-1)^2 (1/b - 1/(a+1)^2) >= 0.
double fp_value(const NormalizedPair& pair, double p);

// E(p) = 4b(1 - a^(1-p)) + (a^(2p) - 1)(1 + a^(1-p))^3. E shares its zeros
// (and, away from them, its sign) with f'(p); E(0) = 4b(1-a) < 0 and
// E(1) = 8(a^2 - 1) > 0, so E brackets a root of f' in (0, 1).
double fp_derivative_surrogate(const NormalizedPair& pair, double p);

// Thrown when a sampled sign pattern of E or f contradicts the expected
// single-interior-root / boundary-maximum picture. Carries the offending
// pair and the crossing brackets so the case is never silently ignored.
class falsification_error : public std::runtime_error {
public:
    falsification_error(const std::string& what, double a, double b, int sign_changes,
                        std::vector<std::pair<double, double>> crossings);

    double a() const { return a_; }
    double b() const { return b_; }
    int sign_changes() const { return sign_changes_; }
    const std::vector<std::pair<double, double>>& crossings() const { return crossings_; }

private:
    double a_, b_;
    int sign_changes_;
    std::vector<std::pair<double, double>> crossings_;
};

struct ExtremumResult {
    double p0 = 0.0;  // in (0, 1)
    double bracket_lo = 0.0, bracket_hi = 0.0;  // E(lo) <= 0 <= E(hi), hi - lo <= tol
    int sign_changes = 0;  // of E on the counting grid; expected exactly 1
};

// Bisection on E over [0, 1] from the guaranteed sign change E(0) < 0 < E(1).
// Also counts sign changes of E on a uniform grid (at least 1001 points,
// configurable upward); any count other than one throws falsification_error.
// tol must lie in (0, 1e-3].
ExtremumResult find_extremum(const NormalizedPair& pair, double tol, int sign_grid_size = 1001);

struct BoundaryMaxReport {
    bool pass = false;
    double max_f = 0.0;    // max of f over the grid
    double argmax_p = 0.0;
    double f0 = 0.0, f1 = 0.0;
    double ceiling = 0.0;  // (1 + a^2)/b, the p = 1 boundary value
    std::string detail;    // non-empty on failure, with full context
};

// Checks max_grid f <= max(f(0), f(1)) + 1e-10 and f(0) <= f(1) + 1e-12,
// i.e. f(p) <= (1 + a^2)/b on the grid. Failures are reported as
// falsification candidates in the returned report, never thrown.
BoundaryMaxReport fp_boundary_max_check(const NormalizedPair& pair, int grid_size);

struct FpProfile {
    double a = 0.0, b = 0.0;
    std::vector<std::pair<double, double>> grid;  // (p, f(p)) samples
    double f0 = 0.0, f1 = 0.0;
    std::optional<double> p0;  // absent when the sign pattern is not the expected one
    int sign_changes = 0;
    int deriv_sign_at_0 = 0, deriv_sign_at_1 = 0;  // sign of E at the endpoints
};

// Full diagnostic profile of f over [0, 1]: the grid, boundary values, the
// located critical point and the E sign data. Unlike find_extremum this does
// not throw on an unexpected sign count; it records it and leaves p0 absent.
FpProfile fp_profile(const NormalizedPair& pair, int grid_size = 1001, double tol = 1e-10);

}  // namespace pangular
