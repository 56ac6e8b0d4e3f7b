#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "pangular/norm.hpp"
#include "pangular/vec.hpp"

namespace pangular {

// Exponent of the p-angular distance
//   alpha_p[x, y] = || x/||x||^(1-p) - y/||y||^(1-p) ||.
// The bound family below is stated for p in [0, 1]; alpha_0 is the classical
// angular distance and alpha_1 = ||x - y||.
class PExponent {
public:
    explicit PExponent(double p);
    double value() const { return p_; }

private:
    double p_;
};

// Secondary exponent q > 0 of the generalized and characterizing bounds.
class QExponent {
public:
    explicit QExponent(double q);
    double value() const { return q_; }

private:
    double q_;
};

// Upper-bound formulas for alpha_p[x, y]:
//
//   maligranda        (2-p) ||x-y|| / max(||x||, ||y||)^(1-p)
//   dw:<q>            2^(1+1/q) ||x-y|| / (||x||^((1-p)q) + ||y||^((1-p)q))^(1/q)
//   ips               2 ||x-y|| / (||x||^(1-p) + ||y||^(1-p))
//   char:<q>          2^(1/q) ||x-y|| / (||x||^((1-p)q) + ||y||^((1-p)q))^(1/q)
//
// maligranda and dw hold in every normed space; ips holds in inner-product
// spaces; char holding for all nonzero pairs characterizes inner-product
// spaces. char:1 coincides with ips; at p = 0, dw:1 is the classical
// Dunkl-Williams bound (constant 4) and char:1 the Kirk-Smiley bound
// (constant 2).
class BoundKind {
public:
    enum class Family { Maligranda, DwGeneral, Ips, Characterizing };

    static BoundKind maligranda() { return BoundKind(Family::Maligranda, 0.0); }
    static BoundKind dw_general(QExponent q) { return BoundKind(Family::DwGeneral, q.value()); }
    static BoundKind ips() { return BoundKind(Family::Ips, 0.0); }
    static BoundKind characterizing(QExponent q) { return BoundKind(Family::Characterizing, q.value()); }

    // Textual form: "maligranda", "dw:<q>", "ips", "char:<q>".
    static BoundKind parse(std::string_view text);
    std::string to_string() const;

    Family family() const { return family_; }
    bool has_q() const { return family_ == Family::DwGeneral || family_ == Family::Characterizing; }
    double q() const;

private:
    BoundKind(Family family, double q) : family_(family), q_(q) {}

    Family family_;
    double q_;
};

// alpha_p[x, y]. Throws on zero vectors (the definition divides by ||x||^(1-p))
// and on dimension mismatch. alpha_p[x, x] = 0.
double p_angular_distance(const NormSpec& spec, const Vec& x, const Vec& y, PExponent p);

// A(x, y) = arccos[(2 - ||x/||x|| - y/||y||||^2) / 2], in [0, pi]. The arccos
// argument is clamped to [-1, 1] within 1e-12; anything further out signals a
// norm for which the formula leaves [-1, 1] and throws instead of clamping.
double angle(const NormSpec& spec, const Vec& x, const Vec& y);

// Value of the selected bound formula at (x, y, p).
double bound_value(const NormSpec& spec, const Vec& x, const Vec& y, PExponent p,
                   const BoundKind& kind);

struct BoundReport {
    double alpha_p = 0.0;
    double bound = 0.0;
    // alpha_p / bound; invariant under joint scaling (x, y) -> (tx, ty).
    // Absent when the pair is degenerate.
    std::optional<double> ratio;
    // ||x - y|| < 1e-12 * max(||x||, ||y||): catastrophic cancellation
    // dominates both sides, so no ratio is reported.
    bool degenerate = false;
    double p = 0.0;
    std::optional<double> q;
    std::string kind;
};

// Throws when x == y exactly (ratio would be 0/0) or on zero vectors.
BoundReport bound_report(const NormSpec& spec, const Vec& x, const Vec& y, PExponent p,
                         const BoundKind& kind);

// alpha_p^2 via the polarization expansion
//   ||x||^(2p) - (||x||^2 + ||y||^2 - ||x-y||^2) / (||x||^(1-p) ||y||^(1-p)) + ||y||^(2p),
// valid only when the norm comes from an inner product. Independent of the
// direct alpha_p evaluation path; used as an oracle against it.
double l1_expansion_alpha_sq(const NormSpec& spec, const Vec& x, const Vec& y, PExponent p);

// Scale-invariant geometry of a nonzero pair, shared by the batch paths so a
// sweep computes norms once per pair. All entries are invariant under joint
// rescaling except nx, ny themselves.
struct PairGeometry {
    double nx = 0.0, ny = 0.0;  // ||x||, ||y||
    double t = 0.0;             // max(nx, ny)
    double nxs = 0.0, nys = 0.0;  // nx/t, ny/t (one of them is 1)
    double dn = 0.0;            // ||x - y|| / t
};

PairGeometry pair_geometry(const NormSpec& spec, const Vec& x, const Vec& y);

// alpha_p / t^p and bound / t^p. p_angular_distance and bound_value are these
// kernels times t^p; ratios can skip the common factor entirely.
double alpha_p_scaled(const NormSpec& spec, const Vec& x, const Vec& y, const PairGeometry& g,
                      double p);
double bound_core(const PairGeometry& g, double p, const BoundKind& kind);

}  // namespace pangular
