#include "catkit/contraction.hpp"
#include "catkit/error.hpp"
#include "catkit/prop2.hpp"

#include <doctest.h>

#include <cmath>

using namespace catkit;

namespace {

constexpr double kTol = 1e-3;

Verdict check(const Prop2Report& r, const std::string& name) {
    for (const auto& c : r.checks) {
        if (c.name == name) {
            return c.verdict;
        }
    }
    FAIL("missing check " << name);
    return Verdict::Fail;
}

}  // namespace

TEST_CASE("single and double mark certificates pass") {
    for (int n : {1, 2}) {
        const Prop2Instance inst = make_prop2_instance(n, 0.5);
        const ChartOracle oracle(inst.patch.complex);
        const Prop2Certificate cert =
            build_prop2_certificate(oracle, inst.patch.geodesic, inst.x, inst.y);
        CAPTURE(n);
        REQUIRE(cert.N() == n);
        CHECK(cert.points.size() == static_cast<std::size_t>(4 + 4 * n));
        CHECK(cert.triangles.size() == static_cast<std::size_t>(5 * n + 2));
        int cat = 0;
        for (const auto& t : cert.triangles) {
            cat += t.cat_minus1 ? 1 : 0;
        }
        CHECK(cat == n);
        const AngledComplex disc = cert.disc();
        CHECK(disc.euler_characteristic() == 1);
        CHECK(std::abs(gauss_bonnet(disc).residual) < 1e-9);
        for (int i = 0; i < n; ++i) {
            CHECK(std::abs(cert.y_residual[i]) < 1e-9);
            CHECK(cert.mark_clearance[i] > 0.5);
        }
        // a_i, b_i, c_i are at distance epsilon from x_i.
        for (const auto& t : cert.triangles) {
            for (double d : t.mark_sides) {
                CHECK((!t.cat_minus1 || d == doctest::Approx(0.5).epsilon(1e-9)));
            }
        }
        for (std::size_t i = 1; i < cert.marks.size(); ++i) {
            CHECK(cert.marks[i] > cert.marks[i - 1]);
        }
        const Prop2Report report = verify_prop2_certificate(cert, kTol);
        for (const auto& c : report.checks) {
            CAPTURE(c.name);
            CAPTURE(c.value);
            CHECK(c.verdict == Verdict::Pass);
        }
        CHECK(report.verdict == Verdict::Pass);
    }
}

TEST_CASE("four marks cannot all clear the segment in H2") {
    const Prop2Instance inst = make_prop2_instance(4, 0.5);
    const ChartOracle oracle(inst.patch.complex);
    const Prop2Certificate cert = build_prop2_certificate(oracle, inst.patch.geodesic, inst.x, inst.y);
    CHECK(cert.N() < 4);
    CHECK(verify_prop2_certificate(cert, kTol).verdict == Verdict::Pass);
}

TEST_CASE("empty certificate when both points project together") {
    const Prop2Instance inst = make_prop2_instance(1, 0.5);
    const ChartOracle oracle(inst.patch.complex);
    const MetricComplex& m = inst.patch.complex;
    const ModelPoint px = m.chart_point(inst.x);
    // Same Fermi abscissa, half the height.
    const double u = std::atanh(px.coords[1] / px.coords[0]);
    const double v = 0.5 * std::asinh(px.coords[2]);
    const Location below = m.chart_locate(ModelPoint{
        Curvature::hyperbolic(),
        {std::cosh(v) * std::cosh(u), std::cosh(v) * std::sinh(u), std::sinh(v)}});
    const Prop2Certificate cert = build_prop2_certificate(oracle, inst.patch.geodesic, inst.x, below);
    CHECK(cert.N() == 0);
    CHECK(std::abs(cert.t_z - cert.t_w) < 1e-9);
    CHECK(cert.collapsed);
    CHECK(cert.triangles.empty());
    const Prop2Report report = verify_prop2_certificate(cert, kTol);
    CHECK(report.verdict == Verdict::Pass);
    CHECK(check(report, "gauss_bonnet") == Verdict::Pass);
}

TEST_CASE("swapped endpoints give the same marks") {
    const Prop2Instance inst = make_prop2_instance(2, 0.5);
    const ChartOracle oracle(inst.patch.complex);
    const auto a = build_prop2_certificate(oracle, inst.patch.geodesic, inst.x, inst.y);
    const auto b = build_prop2_certificate(oracle, inst.patch.geodesic, inst.y, inst.x);
    CHECK_FALSE(a.swapped);
    CHECK(b.swapped);
    CHECK(a.marks == b.marks);
}

TEST_CASE("disjoint ball condition is recorded") {
    const Prop2Instance inst = make_prop2_instance(1, 0.5);
    const ChartOracle oracle(inst.patch.complex);
    const auto cert = build_prop2_certificate(oracle, inst.patch.geodesic, inst.x, inst.y);
    CHECK(cert.d_xy > cert.d_x_gamma);
    CHECK_FALSE(cert.ball_disjoint);
}

TEST_CASE("fault injection is caught") {
    const Prop2Instance inst = make_prop2_instance(2, 0.5);
    const ChartOracle oracle(inst.patch.complex);
    const Prop2Certificate cert = build_prop2_certificate(oracle, inst.patch.geodesic, inst.x, inst.y);
    for (std::size_t f = 0; f < cert.triangles.size(); ++f) {
        Prop2Certificate bad = cert;
        bad.triangles[f].angles[1] += 0.5;
        const Prop2Report report = verify_prop2_certificate(bad, kTol);
        CAPTURE(f);
        CHECK(report.verdict == Verdict::Fail);
        CHECK(check(report, "angles") == Verdict::Fail);
        if (!cert.triangles[f].cat_minus1) {
            CHECK(check(report, "gauss_bonnet") == Verdict::Fail);
        }
    }
}

TEST_CASE("coarse distances are inconclusive") {
    const Prop2Instance inst = make_prop2_instance(1, 0.5);
    const ChartOracle oracle(inst.patch.complex);
    Prop2Certificate cert = build_prop2_certificate(oracle, inst.patch.geodesic, inst.x, inst.y);
    cert.error_bound = 0.01;
    const Prop2Report report = verify_prop2_certificate(cert, kTol);
    CHECK(report.verdict == Verdict::Inconclusive);
    cert.triangles[0].angles[0] += 0.5;
    CHECK(verify_prop2_certificate(cert, kTol).verdict == Verdict::Fail);
}

TEST_CASE("degenerate comparison triangles are reported, not thrown") {
    const Prop2Instance inst = make_prop2_instance(1, 0.5);
    const ChartOracle oracle(inst.patch.complex);
    Prop2Certificate cert = build_prop2_certificate(oracle, inst.patch.geodesic, inst.x, inst.y);
    cert.triangles[0].angles[2] = 0.0;
    Prop2Report report = verify_prop2_certificate(cert, kTol);
    CHECK(report.verdict == Verdict::Fail);
    REQUIRE(report.checks.size() == 1);
    CHECK(report.checks[0].name == "disc");
    CHECK(report.checks[0].value == 1.0);
    cert.error_bound = 0.01;
    CHECK(verify_prop2_certificate(cert, kTol).verdict == Verdict::Inconclusive);
}
