#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pangular/bounds.hpp"
#include "pangular/norm.hpp"
#include "pangular/vec.hpp"

namespace pangular {

// Configuration of the ratio-maximizing violation search. p must be < 1:
// the characterization needs it, and at p = 1 the objective is identically 1.
struct SearchConfig {
    double p = 0.0;  // in [0, 1)
    double q = 1.0;  // > 0
    int restarts = 50;
    int steps_per_restart = 2000;  // objective evaluations per restart
    std::uint64_t seed = 1;
    double ratio_threshold = 1.0 + 1e-7;  // separates violations from fp noise
    double shrink_factor = 0.5;           // in (0, 1)
    double initial_step = 0.3;
    int threads = 1;  // restarts are independent; results do not depend on this

    void validate() const;  // throws std::invalid_argument
};

// A concrete pair whose ratio alpha_p / char:<q> exceeds the threshold: a
// machine-checkable certificate that the norm is not induced by an inner
// product. Recomputing alpha_p and the bound from (spec, x, y, p, q)
// reproduces ratio to 1e-12 relative.
struct ViolationWitness {
    Vec x, y;
    double p = 0.0, q = 0.0;
    double alpha_p = 0.0, bound = 0.0, ratio = 0.0;
    NormSpec spec;
    std::uint64_t seed = 0;
    long long evaluations = 0;  // total across all restarts
    int restart = 0;            // index of the winning restart
};

struct SearchOutcome {
    std::optional<ViolationWitness> witness;
    double best_ratio = 0.0;
    std::optional<std::pair<Vec, Vec>> best_pair;
    long long evaluations = 0;

    bool found() const { return witness.has_value(); }
};

// Maximizes ratio(x, y) = alpha_p[x, y] / char:<q>(x, y) over pairs
// parametrized as x = u (unit vector), y = s * v (unit v, radius s > 0);
// joint-scale invariance of the ratio justifies fixing ||x|| = 1. Seeded
// multi-start coordinate pattern search on (u-angles, v-angles, log s) with
// geometric step shrinking; robust on the kinks of l1/linf where maximizers
// sit. The winner is selected by (ratio, then restart index), so the result
// is identical for any thread count. Budget exhaustion is not an error; the
// outcome then carries the best pair seen.
SearchOutcome search_violation(const NormSpec& spec, const SearchConfig& cfg);

enum class Verdict { ConsistentWithInnerProduct, NotInnerProduct };

std::string to_string(Verdict v);

struct CertifyResult {
    Verdict verdict = Verdict::ConsistentWithInnerProduct;
    std::optional<ViolationWitness> witness;
    double best_ratio = 0.0;
    long long evaluations = 0;
    std::string caveat;  // "search is not a proof" on the consistent branch
};

// A single violating pair of char:<q> with q <= 1 soundly refutes the
// inner-product property (inner-product norms satisfy that inequality for
// every q in (0, 1]). Requires cfg.q <= 1: for q > 1 the inequality fails
// even on l2, so a violation proves nothing. The converse direction is not
// decidable by finite search, so the no-witness verdict is labeled
// ConsistentWithInnerProduct and carries an explicit caveat.
CertifyResult certify_ips(const NormSpec& spec, const SearchConfig& cfg);

// A pair with ||x|| = ||y|| and a gamma for which ||x + y|| > ||gamma x +
// gamma^-1 y|| by more than 1e-9 relative: refutes the equal-norm dilation
// condition that holds in every inner-product space.
struct LorchWitness {
    Vec x, y;
    double gamma = 0.0;
    double lhs = 0.0;    // ||x + y||
    double rhs = 0.0;    // min over the gamma grid of ||gamma x + gamma^-1 y||
    double margin = 0.0;  // lhs - rhs
};

struct LorchOutcome {
    std::optional<LorchWitness> witness;
    long long pairs_tested = 0;
    long long evaluations = 0;
    double best_margin = 0.0;  // max over pairs of lhs - min rhs (may be <= 0)

    bool found() const { return witness.has_value(); }
};

// Samples `budget` seeded pairs, rescales y to ||y|| = ||x|| exactly, and
// sweeps gamma over a sign-symmetric log grid on [1e-2, 1e2] (129 points per
// sign) with local refinement around the best gamma. Negative gamma is
// redundant by the mirror identity ||(-g)x + (-g)^-1 y|| = ||gx + g^-1 y||
// but both signs are swept anyway as a cross-check of that reduction. The
// whole budget is scanned and the max-margin witness returned.
LorchOutcome lorch_test(const NormSpec& spec, long long budget, std::uint64_t seed);

struct ScalingSequence {
    std::vector<double> values;  // s_0 .. s_{n_max}
    double limit = 0.0;          // ||x + y||
    bool non_increasing = false;  // every step within 1e-12 relative slack
};

// s_n = ||gamma^(p^n) x + gamma^(-p^n) y|| for n = 0..n_max, requiring
// ||x|| = ||y|| (1e-12 relative), gamma > 0 and p in (0, 1). In an
// inner-product space the sequence is non-increasing and converges to
// ||x + y||; elsewhere monotonicity can break, so the status is reported
// rather than asserted.
ScalingSequence scaling_sequence(const NormSpec& spec, const Vec& x, const Vec& y, double gamma,
                                 double p, int n_max);

}  // namespace pangular
