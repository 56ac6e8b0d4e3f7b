#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "pangular/bounds.hpp"
#include "pangular/norm.hpp"
#include "pangular/rng.hpp"

using namespace pangular;

namespace {

const double kPi = std::acos(-1.0);

std::vector<NormSpec> norm_family(int dim) {
    std::vector<double> w;
    for (int i = 0; i < dim; ++i) w.push_back(i % 2 == 0 ? 1.0 : 4.0);
    return {NormSpec::l1(dim),       NormSpec::l2(dim),      NormSpec::linf(dim),
            NormSpec::lq(1.5, dim),  NormSpec::lq(3.0, dim), NormSpec::weighted_l2(w)};
}

std::vector<double> p_grid_21() {
    std::vector<double> g;
    for (int i = 0; i <= 20; ++i) g.push_back(i / 20.0);
    return g;
}

// y rescaled so that ||y|| == ||x|| up to a couple of ulps.
Vec rescale_to_norm(const NormSpec& spec, const Vec& y, double target) {
    return (target / norm_eval(spec, y)) * y;
}

}  // namespace

TEST_CASE("exponent types validate their ranges") {
    CHECK_THROWS_AS(PExponent(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(PExponent(1.1), std::invalid_argument);
    CHECK_THROWS_AS(QExponent(0.0), std::invalid_argument);
    CHECK_THROWS_AS(QExponent(-1.0), std::invalid_argument);
    CHECK(PExponent(0.0).value() == 0.0);
    CHECK(PExponent(1.0).value() == 1.0);
    CHECK(QExponent(5.0).value() == 5.0);
}

TEST_CASE("BoundKind textual form") {
    CHECK(BoundKind::parse("maligranda").family() == BoundKind::Family::Maligranda);
    CHECK(BoundKind::parse("ips").family() == BoundKind::Family::Ips);
    CHECK(BoundKind::parse("dw:0.5").q() == 0.5);
    CHECK(BoundKind::parse("char:2").to_string() == "char:2");
    CHECK_THROWS_AS(BoundKind::parse("char:"), std::invalid_argument);
    CHECK_THROWS_AS(BoundKind::parse("char:-1"), std::invalid_argument);
    CHECK_THROWS_AS(BoundKind::parse("dunkl"), std::invalid_argument);
    CHECK_THROWS_AS(BoundKind::maligranda().q(), std::logic_error);
}

TEST_CASE("p_angular_distance on the reference points") {
    const NormSpec l2 = NormSpec::l2(2);
    // unit vectors at p = 0: alpha_0 = ||x - y||
    CHECK(p_angular_distance(l2, Vec{1, 0}, Vec{0, 1}, PExponent(0.0)) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    // identical arguments
    CHECK(p_angular_distance(l2, Vec{3, 4}, Vec{3, 4}, PExponent(0.7)) == 0.0);
    CHECK(p_angular_distance(NormSpec::linf(2), Vec{2, -1}, Vec{2, -1}, PExponent(0.0)) == 0.0);
    // ||x|| = 4, ||y|| = 1, p = 1/2: alpha = ||(2, -1)|| = sqrt(5), cross-checked
    // against the polarization expansion below.
    const double alpha = p_angular_distance(l2, Vec{4, 0}, Vec{0, 1}, PExponent(0.5));
    CHECK(alpha == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
    const double alpha_sq =
        l1_expansion_alpha_sq(NormSpec::weighted_l2({1, 1}), Vec{4, 0}, Vec{0, 1}, PExponent(0.5));
    CHECK(alpha * alpha == doctest::Approx(alpha_sq).epsilon(1e-12));
}

TEST_CASE("p_angular_distance rejects zero vectors") {
    const NormSpec l2 = NormSpec::l2(2);
    CHECK_THROWS_AS(p_angular_distance(l2, Vec{0, 0}, Vec{1, 0}, PExponent(0.5)),
                    std::invalid_argument);
    CHECK_THROWS_AS(p_angular_distance(l2, Vec{1, 0}, Vec{0, 0}, PExponent(0.5)),
                    std::invalid_argument);
}

TEST_CASE("angle on the reference points") {
    const NormSpec l2 = NormSpec::l2(2);
    CHECK(angle(l2, Vec{1, 0}, Vec{0, 1}) == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(angle(l2, Vec{3, 4}, Vec{6, 8}) == 0.0);  // y = 2x
    CHECK(angle(l2, Vec{3, 4}, Vec{-3, -4}) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(angle(NormSpec::linf(2), Vec{1, 1}, Vec{-2, -2}) == doctest::Approx(kPi).epsilon(1e-15));
}

TEST_CASE("bound_value on the reference points") {
    const NormSpec l2 = NormSpec::l2(2);
    const NormSpec linf = NormSpec::linf(2);

    // equal-norm equality case of the ips bound
    CHECK(bound_value(l2, Vec{1, 0}, Vec{0, 1}, PExponent(0.0), BoundKind::ips()) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    // ||x-y||_inf = 1, ||x||_inf = 2, ||y||_inf = 1
    CHECK(bound_value(linf, Vec{2, 0}, Vec{1, 1}, PExponent(0.0),
                      BoundKind::characterizing(QExponent(1.0))) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    // q = 1 specialization of the generalized bound is the classical constant-4 bound
    CHECK(bound_value(l2, Vec{1, 0}, Vec{0, 1}, PExponent(0.0),
                      BoundKind::dw_general(QExponent(1.0))) ==
          doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));

    Rng rng(3);
    for (int i = 0; i < 500; ++i) {
        const auto [x, y] = sample_pair(rng, 3);
        const NormSpec l23 = NormSpec::l2(3);
        const double nx = norm_eval(l23, x);
        const double ny = norm_eval(l23, y);
        const double nd = norm_eval(l23, x - y);
        // classical Dunkl-Williams form at p = 0
        CHECK(bound_value(l23, x, y, PExponent(0.0), BoundKind::dw_general(QExponent(1.0))) ==
              doctest::Approx(4.0 * nd / (nx + ny)).epsilon(1e-12));
        // Kirk-Smiley form at p = 0
        CHECK(bound_value(l23, x, y, PExponent(0.0),
                          BoundKind::characterizing(QExponent(1.0))) ==
              doctest::Approx(2.0 * nd / (nx + ny)).epsilon(1e-12));
    }
}

TEST_CASE("char:1 coincides with ips bit for bit") {
    Rng rng(17);
    const NormSpec linf = NormSpec::linf(3);
    for (int i = 0; i < 300; ++i) {
        const auto [x, y] = sample_pair(rng, 3);
        for (const double p : {0.0, 0.25, 0.9, 1.0}) {
            CHECK(bound_value(linf, x, y, PExponent(p), BoundKind::ips()) ==
                  bound_value(linf, x, y, PExponent(p),
                              BoundKind::characterizing(QExponent(1.0))));
        }
    }
}

TEST_CASE("at p = 1 the characterizing bound equals ||x - y|| = alpha_1") {
    Rng rng(5);
    const NormSpec l1 = NormSpec::l1(2);
    for (int i = 0; i < 200; ++i) {
        const auto [x, y] = sample_pair(rng, 2);
        const double nd = norm_eval(l1, x - y);
        for (const double q : {0.25, 1.0, 5.0}) {
            CHECK(bound_value(l1, x, y, PExponent(1.0),
                              BoundKind::characterizing(QExponent(q))) ==
                  doctest::Approx(nd).epsilon(1e-12));
        }
        CHECK(p_angular_distance(l1, x, y, PExponent(1.0)) ==
              doctest::Approx(nd).epsilon(1e-14));
    }
}

TEST_CASE("bound_report ratio and degenerate handling") {
    const NormSpec linf = NormSpec::linf(2);
    const BoundReport rep = bound_report(linf, Vec{2, 0}, Vec{1, 1}, PExponent(0.0),
                                         BoundKind::characterizing(QExponent(1.0)));
    REQUIRE(rep.ratio.has_value());
    CHECK(*rep.ratio == doctest::Approx(1.5).epsilon(1e-12));
    CHECK_FALSE(rep.degenerate);
    CHECK(*rep.ratio * rep.bound == doctest::Approx(rep.alpha_p).epsilon(1e-12));

    // x == y: no meaningful ratio at all
    CHECK_THROWS_AS(bound_report(linf, Vec{1, 1}, Vec{1, 1}, PExponent(0.0), BoundKind::ips()),
                    std::invalid_argument);

    // near-equal pair: flagged, not rated
    const BoundReport degen = bound_report(linf, Vec{1.0, 1.0}, Vec{1.0 + 1e-15, 1.0},
                                           PExponent(0.0), BoundKind::ips());
    CHECK(degen.degenerate);
    CHECK_FALSE(degen.ratio.has_value());
}

TEST_CASE("ips ratio stays below 1 in an inner-product space") {
    const NormSpec l2 = NormSpec::l2(2);
    const BoundReport rep =
        bound_report(l2, Vec{3, 0}, Vec{0, 1}, PExponent(0.0), BoundKind::ips());
    REQUIRE(rep.ratio.has_value());
    CHECK(*rep.ratio <= 1.0 + 1e-9);
}

TEST_CASE("equal norms force ratio 1 for every characterizing q") {
    Rng rng(23);
    for (const char* text : {"l1", "l2", "linf", "lq:3"}) {
        const NormSpec spec = NormSpec::parse(text, 2);
        for (int i = 0; i < 100; ++i) {
            const auto [x, y0] = sample_pair(rng, 2);
            const Vec y = rescale_to_norm(spec, y0, norm_eval(spec, x));
            if (norm_eval(spec, x - y) < 1e-6) continue;
            for (const double q : {0.25, 1.0, 5.0}) {
                const BoundReport rep = bound_report(spec, x, y, PExponent(0.37),
                                                     BoundKind::characterizing(QExponent(q)));
                REQUIRE(rep.ratio.has_value());
                CHECK(*rep.ratio == doctest::Approx(1.0).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("l1_expansion_alpha_sq on the reference points") {
    const NormSpec unit = NormSpec::weighted_l2({1, 1});
    CHECK(l1_expansion_alpha_sq(unit, Vec{1, 0}, Vec{0, 1}, PExponent(0.0)) ==
          doctest::Approx(2.0).epsilon(1e-15));
    CHECK(l1_expansion_alpha_sq(unit, Vec{1, 1}, Vec{1, 1}, PExponent(0.3)) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(l1_expansion_alpha_sq(unit, Vec{4, 0}, Vec{0, 1}, PExponent(0.5)) ==
          doctest::Approx(5.0).epsilon(1e-15));
    CHECK_THROWS_AS(l1_expansion_alpha_sq(NormSpec::linf(2), Vec{1, 0}, Vec{0, 1}, PExponent(0.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(l1_expansion_alpha_sq(NormSpec::lq(3.0, 2), Vec{1, 0}, Vec{0, 1},
                                          PExponent(0.0)),
                    std::invalid_argument);
}

TEST_CASE("polarization expansion tracks the direct evaluation") {
    // 1e4 seeded samples on inner-product specs, 1e-10 relative.
    for (const auto& spec : {NormSpec::weighted_l2({1, 4}), NormSpec::weighted_l2({2, 0.5, 3})}) {
        Rng rng(101);
        for (int i = 0; i < 10000; ++i) {
            const auto [x, y] = sample_pair(rng, spec.dim());
            const double p = rng.uniform01();
            const double alpha = p_angular_distance(spec, x, y, PExponent(p));
            const double via_expansion = l1_expansion_alpha_sq(spec, x, y, PExponent(p));
            CHECK(std::fabs(alpha * alpha - via_expansion) <=
                  1e-10 * std::max(1.0, alpha * alpha));
        }
    }
}

TEST_CASE("alpha_p is symmetric, homogeneous and reduces at the endpoints") {
    Rng rng(31);
    for (int dim : {2, 3}) {
        const auto specs = norm_family(dim);
        for (const NormSpec& spec : specs) {
            for (int i = 0; i < 200; ++i) {
                const auto [x, y] = sample_pair(rng, dim);
                const double p = rng.uniform01();

                // exact symmetry
                CHECK(p_angular_distance(spec, x, y, PExponent(p)) ==
                      p_angular_distance(spec, y, x, PExponent(p)));

                // t^p homogeneity
                const double alpha = p_angular_distance(spec, x, y, PExponent(p));
                for (const double t : {1e-3, 0.5, 2.0, 1e3}) {
                    const double scaled = p_angular_distance(spec, t * x, t * y, PExponent(p));
                    CHECK(scaled ==
                          doctest::Approx(std::pow(t, p) * alpha).epsilon(1e-12));
                }

                // endpoint reductions
                const double nx = norm_eval(spec, x);
                const double ny = norm_eval(spec, y);
                const double a0 = norm_eval(spec, (1.0 / nx) * x - (1.0 / ny) * y);
                CHECK(p_angular_distance(spec, x, y, PExponent(0.0)) ==
                      doctest::Approx(a0).epsilon(1e-14));
                CHECK(p_angular_distance(spec, x, y, PExponent(1.0)) ==
                      doctest::Approx(norm_eval(spec, x - y)).epsilon(1e-14));
            }
        }
    }
}

TEST_CASE("universal bounds hold across the norm family") {
    // Desk-scale version of the acceptance sweep: alpha_p never exceeds the
    // maligranda bound nor dw:<q>, and maligranda <= dw:<q> row by row.
    const auto p_grid = p_grid_21();
    const std::vector<double> q_set{0.25, 0.5, 1.0, 2.0, 5.0};
    for (int dim : {2, 3}) {
        Rng rng(1234);
        for (const NormSpec& spec : norm_family(dim)) {
            for (int i = 0; i < 300; ++i) {
                const auto [x, y] = sample_pair(rng, dim);
                const PairGeometry g = pair_geometry(spec, x, y);
                if (g.dn < 1e-12) continue;
                for (const double p : p_grid) {
                    const double alpha = alpha_p_scaled(spec, x, y, g, p);
                    const double mal = bound_core(g, p, BoundKind::maligranda());
                    CHECK(alpha <= mal * (1.0 + 1e-9));
                    for (const double q : q_set) {
                        const double dw =
                            bound_core(g, p, BoundKind::dw_general(QExponent(q)));
                        CHECK(alpha <= dw * (1.0 + 1e-9));
                        CHECK(mal <= dw * (1.0 + 1e-12));
                    }
                }
            }
        }
    }
}

TEST_CASE("ips and characterizing bounds hold on inner-product specs") {
    const auto p_grid = p_grid_21();
    for (const auto& spec : {NormSpec::l2(3), NormSpec::weighted_l2({1, 4, 2})}) {
        Rng rng(55);
        for (int i = 0; i < 300; ++i) {
            const auto [x, y] = sample_pair(rng, 3);
            const PairGeometry g = pair_geometry(spec, x, y);
            if (g.dn < 1e-12) continue;
            for (const double p : p_grid) {
                const double alpha = alpha_p_scaled(spec, x, y, g, p);
                CHECK(alpha <= bound_core(g, p, BoundKind::ips()) * (1.0 + 1e-9));
                for (const double q : {0.1, 0.5, 1.0}) {
                    CHECK(alpha <= bound_core(g, p, BoundKind::characterizing(QExponent(q))) *
                                       (1.0 + 1e-9));
                }
            }
        }
    }
}

TEST_CASE("characterizing bound decreases in q") {
    const std::vector<double> qs{0.25, 0.5, 1.0, 2.0, 5.0};
    Rng rng(77);
    for (const char* text : {"l1", "l2", "linf"}) {
        const NormSpec spec = NormSpec::parse(text, 2);
        for (int i = 0; i < 300; ++i) {
            const auto [x, y] = sample_pair(rng, 2);
            const PairGeometry g = pair_geometry(spec, x, y);
            if (g.dn < 1e-12) continue;
            const double p = rng.uniform01();
            for (std::size_t i1 = 0; i1 < qs.size(); ++i1) {
                for (std::size_t i2 = i1 + 1; i2 < qs.size(); ++i2) {
                    const double b1 = bound_core(g, p, BoundKind::characterizing(QExponent(qs[i1])));
                    const double b2 = bound_core(g, p, BoundKind::characterizing(QExponent(qs[i2])));
                    CHECK(b2 <= b1 * (1.0 + 1e-12));
                    // strict decrease whenever the norms differ (p < 1 keeps
                    // the exponents alive)
                    if (std::fabs(g.nxs - g.nys) > 1e-3 && p < 0.99) CHECK(b2 < b1);
                }
            }
        }
    }
}

TEST_CASE("scalar inequality behind the q-monotonicity") {
    // a^t + b^t <= 2^(1-t) (a + b)^t for a, b >= 0 and t in (0, 1]
    Rng rng(91);
    for (int i = 0; i < 5000; ++i) {
        const double a = rng.log_uniform(1e-6, 1e6);
        const double b = rng.uniform01() < 0.1 ? 0.0 : rng.log_uniform(1e-6, 1e6);
        const double t = rng.uniform01() < 0.1 ? 1.0 : rng.uniform(1e-3, 1.0);
        const double lhs = std::pow(a, t) + std::pow(b, t);
        const double rhs = std::pow(2.0, 1.0 - t) * std::pow(a + b, t);
        CHECK(lhs <= rhs * (1.0 + 1e-12));
    }
}

TEST_CASE("ratio is invariant under joint rescaling") {
    Rng rng(13);
    const NormSpec linf = NormSpec::linf(2);
    for (int i = 0; i < 200; ++i) {
        const auto [x, y] = sample_pair(rng, 2);
        const double p = rng.uniform01();
        const BoundKind kind = BoundKind::characterizing(QExponent(0.5));
        const BoundReport base = bound_report(linf, x, y, PExponent(p), kind);
        if (!base.ratio) continue;
        for (const double t : {1e-2, 10.0}) {
            const BoundReport scaled = bound_report(linf, t * x, t * y, PExponent(p), kind);
            REQUIRE(scaled.ratio.has_value());
            CHECK(*scaled.ratio == doctest::Approx(*base.ratio).epsilon(1e-12));
        }
    }
}

TEST_CASE("grid oracle: l-infinity and l1 admit ratios well above 1") {
    // Exhaustive 1-degree sweep over both unit directions and a log grid of
    // radii. This is the independent evidence that char:1 violations exist in
    // these spaces and that 1.5 is attainable (the (2,0),(1,1) pair).
    const BoundKind kind = BoundKind::characterizing(QExponent(1.0));
    for (const char* text : {"linf", "l1"}) {
        const NormSpec spec = NormSpec::parse(text, 2);
        double best = 0.0;
        for (int iu = 0; iu < 360; ++iu) {
            const double tu = iu * kPi / 180.0;
            const Vec u{std::cos(tu), std::sin(tu)};
            const Vec un = (1.0 / norm_eval(spec, u)) * u;
            for (int iv = 0; iv < 360; ++iv) {
                const double tv = iv * kPi / 180.0;
                const Vec v{std::cos(tv), std::sin(tv)};
                const Vec vn = (1.0 / norm_eval(spec, v)) * v;
                for (int is = 0; is <= 40; ++is) {
                    const double s = std::pow(10.0, -1.0 + 2.0 * is / 40.0);
                    const Vec y = s * vn;
                    const PairGeometry g = pair_geometry(spec, un, y);
                    if (g.dn < 1e-12) continue;
                    const double r = alpha_p_scaled(spec, un, y, g, 0.0) / bound_core(g, 0.0, kind);
                    if (r > best) best = r;
                }
            }
        }
        CAPTURE(text);
        CHECK(best >= 1.499);
    }
}
