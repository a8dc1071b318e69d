#include <doctest.h>

#include <cmath>

#include "algpos/ap.hpp"
#include "algpos/simplex.hpp"
#include "helpers.hpp"

using namespace algpos;

TEST_CASE("simplex solves a small known LP") {
    // max x + y  s.t.  x <= 1, y <= 2, x + y <= 2.5
    const auto res = simplex_maximize({{1, 0}, {0, 1}, {1, 1}}, {1, 2, 2.5}, {1, 1});
    CHECK(res.objective == doctest::Approx(2.5));
    CHECK(res.x[0] + res.x[1] == doctest::Approx(2.5));
    CHECK_THROWS_AS(simplex_maximize({{-1.0}}, {1.0}, {1.0}), LpNumericalFailure);  // unbounded
}

TEST_CASE("eigen oracle accepts the rank-one positive matrix") {
    const auto cert = eigen_ap_check(parse_matrix("1 1; 1 1"));
    REQUIRE(cert.has_value());
    CHECK(cert->pair.value == doctest::Approx(2.0));
    CHECK(cert->pair.right[0] == doctest::Approx(1.0));
    CHECK(cert->pair.right[1] == doctest::Approx(1.0));
    CHECK(cert->min_entry == doctest::Approx(1.0));
    CHECK(cert->gap == doctest::Approx(2.0));
}

TEST_CASE("eigen oracle on the two printed witnesses of row 8.2") {
    // condition a11*a21 + a23*a31 > 0 fails at value 0
    CHECK_FALSE(eigen_ap_check(parse_matrix("1 1 0; -1 0 1; 1 0 0")).has_value());
    // larger cycle entries tip it over
    CHECK(eigen_ap_check(parse_matrix("1 1 0; -1 0 10; 10 0 0")).has_value());
}

TEST_CASE("certificate_search on a strictly positive matrix uses p(x) = x") {
    const RealMatrix a = parse_matrix("0.1 5; 5 7");
    const auto cert = certificate_search(a, 1);
    REQUIRE(cert.has_value());
    REQUIRE(cert->offdiag_coeffs.size() == 1);
    CHECK(cert->offdiag_coeffs[0] == 1.0);
    CHECK(cert->k0 == 0.0);
    CHECK(cert->margin == doctest::Approx(0.1));
}

TEST_CASE("certificate_search finds the degree-2 certificate on the 18.4 shape") {
    // off-diagonal of A^2 is all ones, so k = (0, 1) attains LP margin 1
    const RealMatrix a = parse_matrix("0 -1 1; 1 0 -1; -1 1 0");
    const auto cert = certificate_search(a, 2);
    REQUIRE(cert.has_value());
    REQUIRE(cert->offdiag_coeffs.size() == 2);
    CHECK(cert->offdiag_coeffs[1] == doctest::Approx(1.0));
    CHECK(cert->offdiag_coeffs[0] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(cert->margin == doctest::Approx(1.0));
    // re-evaluation through poly_eval_matrix reproduces the margin
    const RealMatrix p = poly_eval_matrix(cert->poly(), a);
    CHECK(p.min_entry() >= cert->margin - 1e-10 * p.max_abs());
}

TEST_CASE("certificate_search rejects the failing 8.2 witness at degree 2") {
    CHECK_FALSE(certificate_search(parse_matrix("1 1 0; -1 0 1; 1 0 0"), 2).has_value());
}

TEST_CASE("is_ap agrees on easy cases") {
    const ApVerdict pos = is_ap(parse_matrix("0.5 2; 3 0.1"));
    CHECK(pos.is_ap);
    CHECK(pos.agreement == Agreement::Agree);
    CHECK(pos.eigen.has_value());
    CHECK(pos.poly.has_value());

    const ApVerdict rot = is_ap(parse_matrix("0 1; -1 0"));
    CHECK_FALSE(rot.is_ap);
    CHECK(rot.agreement == Agreement::Agree);
    CHECK(rot.eigen_margin == -std::numeric_limits<double>::infinity());
}

TEST_CASE("is_ap on the printed 9.3 witnesses") {
    CHECK_FALSE(is_ap(parse_matrix("0 1 0; -1 0 1; 1 0 -1")).is_ap);
    CHECK(is_ap(parse_matrix("0 2 0; -1 0 2; 2 0 -1")).is_ap);
}

TEST_CASE("closure transforms") {
    const RealMatrix sym = parse_matrix("1 2; 2 3");
    CHECK(closure_transform(sym, Transpose{}) == sym);
    const RealMatrix a = parse_matrix("1 -2; 0.5 4");
    CHECK(closure_transform(a, AffineShift{0.0, 1.0}) == a);
    CHECK(closure_transform(closure_transform(a, Negate{}), Negate{}) == a);
    CHECK_THROWS_AS(closure_transform(a, AffineShift{1.0, 0.0}), DegenerateScale);
    CHECK_THROWS_AS(closure_transform(a, PermSim{{0, 0}}), DimensionMismatch);
    const RealMatrix p = closure_transform(a, PermSim{{1, 0}});
    CHECK(p(1, 1) == a(0, 0));
    CHECK(p(0, 1) == a(1, 0));
}

TEST_CASE("verdict is invariant under the closure transforms") {
    testutil::Rng rng(0x7E57);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + rng.below(3);
        const RealMatrix a = testutil::random_matrix(rng, n, 0.25);
        const ApVerdict base = is_ap(a);
        if (base.agreement == Agreement::Borderline) continue;
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::swap(perm[0], perm[n - 1]);
        const ClosureTransform ts[] = {Transpose{}, Negate{}, PermSim{perm},
                                       AffineShift{-1.0, 0.5}, AffineShift{3.0, 2.0}};
        for (const auto& t : ts) {
            const ApVerdict got = is_ap(closure_transform(a, t));
            if (got.agreement == Agreement::Borderline) continue;
            CHECK(got.is_ap == base.is_ap);
            ++checked;
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("the two oracles agree away from the borderline band") {
    testutil::Rng rng(0x0A11);
    int disagreements = 0, solid = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 3 + rng.below(2);
        const RealMatrix a = testutil::random_matrix(rng, n, 0.3);
        const ApVerdict v = is_ap(a);
        if (std::isfinite(v.eigen_margin) && std::fabs(v.eigen_margin) < 1e-6) continue;
        if (std::fabs(v.poly_margin) < 1e-6) continue;
        ++solid;
        disagreements += v.eigen.has_value() != v.poly.has_value();
    }
    CHECK(solid > 100);
    CHECK(disagreements == 0);
}

TEST_CASE("eigen certificates satisfy their invariants") {
    testutil::Rng rng(0xBEEF);
    int found = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const RealMatrix a = testutil::random_matrix(rng, 3, 0.3);
        const auto cert = eigen_ap_check(a);
        if (!cert) continue;
        ++found;
        CHECK(cert->min_entry > 0.0);
        CHECK(cert->gap > 0.0);
        double worst = 0.0;
        for (int i = 0; i < 3; ++i) {
            double s = 0.0;
            for (int j = 0; j < 3; ++j) s += a(i, j) * cert->pair.right[j];
            worst = std::max(worst, std::fabs(s - cert->pair.value * cert->pair.right[i]));
        }
        CHECK(worst <= 1e-8 * std::max(1.0, a.inf_norm()));
    }
    CHECK(found > 5);
}

TEST_CASE("block-triangular matrices are never algebraically positive") {
    testutil::Rng rng(0xB10C);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + rng.below(2);
        RealMatrix a = testutil::random_matrix(rng, n, 0.0);
        const int split = 1 + rng.below(n - 1);
        for (int i = split; i < n; ++i)
            for (int j = 0; j < split; ++j) a(i, j) = 0.0;
        CHECK_FALSE(is_ap(a).is_ap);
    }
}

TEST_CASE("certificate json wire format") {
    const auto cert = certificate_search(parse_matrix("1 1; 1 1"), 1);
    REQUIRE(cert.has_value());
    const std::string j = certificate_json(*cert);
    CHECK(j.find("\"k\":[1.0]") != std::string::npos);
    CHECK(j.find("\"margin\":1.0") != std::string::npos);
    const auto ec = eigen_ap_check(parse_matrix("1 1; 1 1"));
    const std::string je = certificate_json(*ec);
    CHECK(je.find("\"lambda\":2.0") != std::string::npos);
    CHECK(je.find("\"gap\":2.0") != std::string::npos);
}
