#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pangular/vec.hpp"

namespace pangular {

enum class NormKind { Lq, LInf, WeightedL2 };

// One of the norm families on R^n:
//   Lq          (sum |v_i|^q)^(1/q), q >= 1 (q < 1 breaks the triangle inequality)
//   LInf        max |v_i|
//   WeightedL2  sqrt(sum w_i v_i^2), all w_i > 0
//
// The dimension is fixed per spec; evaluating a vector of another dimension
// is an error, not a broadcast.
class NormSpec {
public:
    static NormSpec lq(double q, int dim);
    static NormSpec linf(int dim);
    static NormSpec weighted_l2(std::vector<double> weights);

    static NormSpec l1(int dim) { return lq(1.0, dim); }
    static NormSpec l2(int dim) { return lq(2.0, dim); }

    // Textual form: "l1", "l2", "linf", "lq:<q>", "wl2:<w1,w2,...>". Parsing
    // is exact; malformed strings throw. `dim` applies to the scalar kinds,
    // wl2 takes its dimension from the weight list.
    static NormSpec parse(std::string_view text, int dim);
    std::string to_string() const;

    NormKind kind() const { return kind_; }
    int dim() const { return dim_; }
    double q() const;                            // Lq only
    const std::vector<double>& weights() const;  // WeightedL2 only

    // True exactly for norms induced by an inner product: weighted Euclidean
    // norms and Lq with q == 2.
    bool is_inner_product() const;

private:
    NormSpec(NormKind kind, double q, std::vector<double> weights, int dim);

    NormKind kind_;
    double q_ = 0.0;
    std::vector<double> weights_;
    int dim_;
};

// ||v|| under spec. Rescales by the max absolute coordinate before
// exponentiation so extreme magnitudes do not overflow or underflow.
double norm_eval(const NormSpec& spec, const Vec& v);

struct AxiomFailure {
    std::string axiom;  // "nonneg" | "definiteness" | "homogeneity" | "triangle"
    Vec v;
    Vec u;
    double t = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct AxiomReport {
    int samples = 0;
    std::vector<AxiomFailure> failures;
    bool ok() const { return failures.empty(); }
};

// Seeded spot-check of the norm axioms: absolute homogeneity and the triangle
// inequality at relative tolerance 1e-12, plus nonnegativity and definiteness.
// Failures are data (returned with witnesses), not errors.
AxiomReport validate_norm_axioms(const NormSpec& spec, int sample_count, std::uint64_t seed);

}  // namespace pangular
