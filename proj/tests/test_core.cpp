#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bfn/field.hpp"
#include "bfn/gain.hpp"
#include "bfn/grid.hpp"
#include "bfn/interpolate.hpp"
#include "bfn/modal.hpp"
#include "bfn/norms.hpp"
#include "bfn/profiles.hpp"

using namespace bfn;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("grid spacing and node layout") {
    const Grid1D gp(8, BoundaryKind::Periodic);
    CHECK(gp.dx() == doctest::Approx(0.125));
    CHECK(gp.node(7) == doctest::Approx(0.875));

    const Grid1D gd(9, BoundaryKind::Dirichlet);
    CHECK(gd.dx() == doctest::Approx(0.125));
    CHECK(gd.node(8) == doctest::Approx(1.0));

    CHECK_THROWS_AS(Grid1D(3, BoundaryKind::Periodic), PreconditionError);
}

TEST_CASE("wrap01 stays inside the half-open interval") {
    CHECK(wrap01(1.25) == doctest::Approx(0.25));
    CHECK(wrap01(-0.25) == doctest::Approx(0.75));
    CHECK(wrap01(3.0) == 0.0);
    CHECK(wrap01(-1e-17) < 1.0);
    CHECK(wrap01(-1e-17) >= 0.0);
}

TEST_CASE("field validation") {
    const Grid1D gd(16, BoundaryKind::Dirichlet);
    std::vector<double> bad(16, 0.0);
    bad[0] = 0.1;
    CHECK_THROWS_AS(Field(gd, bad, 0.0), PreconditionError);

    std::vector<double> nan(16, 0.0);
    nan[5] = std::nan("");
    CHECK_THROWS_AS(Field(gd, nan, 0.0), PreconditionError);

    CHECK_THROWS_AS(Field(gd, std::vector<double>(15, 0.0), 0.0), PreconditionError);

    const Field f = Field::sample(gd, [](double x) { return std::sin(kPi * x); });
    CHECK(f.values.front() == 0.0);
    CHECK(f.values.back() == 0.0);
}

TEST_CASE("field arithmetic") {
    const Grid1D g(8, BoundaryKind::Periodic);
    const Field a = Field::sample(g, [](double x) { return x; });
    const Field b = Field::sample(g, [](double x) { return 2 * x; });
    const Field s = a + b;
    const Field d = b - a;
    CHECK(s.values[3] == doctest::Approx(3 * g.node(3)));
    CHECK(d.values[3] == doctest::Approx(g.node(3)));
    CHECK(max_abs(2.0 * a) == doctest::Approx(2 * g.node(7)));
}

TEST_CASE("l2 norm of a pure mode") {
    const Grid1D g(256, BoundaryKind::Periodic);
    const Field f = Field::sample(g, [](double x) { return std::sin(2 * kPi * x); });
    CHECK(std::abs(l2_norm(f) - std::sqrt(0.5)) <= 1e-12);
}

TEST_CASE("linf_grad approximates the slope bound") {
    const Grid1D g(512, BoundaryKind::Periodic);
    const Field f = Field::sample(g, [](double x) { return std::sin(2 * kPi * x); });
    CHECK(std::abs(linf_grad(f) - 2 * kPi) <= 0.01);

    const Grid1D gd(129, BoundaryKind::Dirichlet);
    const Field q = Field::sample(gd, [](double x) { return x * (1 - x); });
    CHECK(std::abs(linf_grad(q) - 1.0) <= gd.dx() + 1e-12);
}

TEST_CASE("linear and cubic interpolation") {
    const Grid1D g(33, BoundaryKind::Dirichlet);
    std::vector<double> v(33);
    auto cubic = [](double x) { return x * x * x - x; };
    for (int j = 0; j < 33; ++j) v[static_cast<size_t>(j)] = cubic(g.node(j));

    CHECK(interp_linear(g, v, g.node(7)) == doctest::Approx(v[7]));
    CHECK(std::abs(interp_cubic(g, v, 0.123456) - cubic(0.123456)) <= 1e-12);

    const Grid1D gp(64, BoundaryKind::Periodic);
    std::vector<double> w(64);
    for (int j = 0; j < 64; ++j) w[static_cast<size_t>(j)] = std::sin(2 * kPi * gp.node(j));
    CHECK(std::abs(interp_cubic(gp, w, 1.25) - interp_cubic(gp, w, 0.25)) <= 1e-14);
}

TEST_CASE("fourth-order gradient") {
    const Grid1D g(512, BoundaryKind::Periodic);
    std::vector<double> v(512);
    for (int j = 0; j < 512; ++j) v[static_cast<size_t>(j)] = std::sin(2 * kPi * g.node(j));
    const std::vector<double> d = gradient(g, v);
    double worst = 0;
    for (int j = 0; j < 512; ++j)
        worst = std::max(worst,
                         std::abs(d[static_cast<size_t>(j)] - 2 * kPi * std::cos(2 * kPi * g.node(j))));
    CHECK(worst <= 1e-6);
}

TEST_CASE("pchip is monotone and interpolating") {
    const Pchip p({0.0, 1.0, 2.0, 3.0}, {0.0, 0.1, 0.9, 1.0});
    CHECK(p(1.0) == doctest::Approx(0.1));
    CHECK(p(1.5) > 0.1);
    CHECK(p(1.5) < 0.9);
    CHECK(p(1.2) <= p(1.6));
}

TEST_CASE("periodic resampling") {
    const Grid1D g(128, BoundaryKind::Periodic);

    std::vector<double> pos = g.nodes();
    std::vector<double> val(128);
    for (int j = 0; j < 128; ++j) val[static_cast<size_t>(j)] = std::cos(2 * kPi * g.node(j));
    const Field exact = resample_periodic(pos, val, g, 0.0);
    for (int j = 0; j < 128; ++j)
        CHECK(std::abs(exact.values[static_cast<size_t>(j)] - val[static_cast<size_t>(j)]) <= 1e-14);

    for (int j = 0; j < 128; ++j) {
        pos[static_cast<size_t>(j)] = g.node(j) + 0.3;
        val[static_cast<size_t>(j)] = std::sin(2 * kPi * pos[static_cast<size_t>(j)]);
    }
    const Field back = resample_periodic(pos, val, g, 0.0);
    double worst = 0;
    for (int j = 0; j < 128; ++j)
        worst = std::max(worst, std::abs(back.values[static_cast<size_t>(j)] -
                                         std::sin(2 * kPi * g.node(j))));
    CHECK(worst <= 1e-3);
}

TEST_CASE("modal round trips") {
    const Grid1D gd(64, BoundaryKind::Dirichlet);
    CHECK(full_mode_count(gd, ModalBasis::Sine) == 62);
    const Field f = Field::sample(gd, [](double x) {
        return 0.3 * std::sin(kPi * x) + 0.1 * std::sin(5 * kPi * x);
    });
    const ModalRepr m = analyze(f, ModalBasis::Sine);
    CHECK(std::abs(m.coeffs[0].real() - 0.3) <= 1e-12);
    CHECK(std::abs(m.coeffs[4].real() - 0.1) <= 1e-12);
    CHECK(max_abs(synthesize(m) - f) <= 1e-12);

    const Grid1D gn(64, BoundaryKind::Neumann);
    CHECK(full_mode_count(gn, ModalBasis::Cosine) == 64);
    const Field h = Field::sample(gn, [](double x) {
        return 0.2 + 0.4 * std::cos(3 * kPi * x);
    });
    const ModalRepr mc = analyze(h, ModalBasis::Cosine);
    CHECK(std::abs(mc.coeffs[0].real() - 0.2) <= 1e-12);
    CHECK(std::abs(mc.coeffs[3].real() - 0.4) <= 1e-12);
    CHECK(max_abs(synthesize(mc) - h) <= 1e-12);

    const Grid1D gp(64, BoundaryKind::Periodic);
    const Field u = Field::sample(gp, [](double x) { return std::sin(2 * kPi * x) + 0.5; });
    CHECK(max_abs(synthesize(analyze(u, ModalBasis::Fourier)) - u) <= 1e-12);
}

TEST_CASE("analytic profile parsing") {
    const AnalyticProfile p = AnalyticProfile::parse("sin2pi 0.2 0.5 0.1");
    CHECK(p.shape == AnalyticProfile::Shape::Sin2Pi);
    CHECK(p.amplitude == doctest::Approx(0.2));
    CHECK(p.phase == doctest::Approx(0.5));
    CHECK(p.offset == doctest::Approx(0.1));
    CHECK(p.value(0.0) == doctest::Approx(0.2 * std::sin(0.5) + 0.1));
    CHECK(std::abs(p.min_slope() + 0.4 * kPi) <= 1e-14);
    CHECK(p.max_abs_value() == doctest::Approx(0.3));

    const AnalyticProfile q = AnalyticProfile::parse("sinpi 1 0.2");
    CHECK(q.shape == AnalyticProfile::Shape::SinPi);
    CHECK(q.offset == doctest::Approx(0.2));

    CHECK(AnalyticProfile::parse("zero").is_zero());
    CHECK_THROWS_AS(AnalyticProfile::parse("bogus 1"), ConfigError);
    CHECK_THROWS_AS(AnalyticProfile::parse("sinpi"), ConfigError);
    CHECK_THROWS_AS(AnalyticProfile::parse("zero 1"), ConfigError);
}

TEST_CASE("gain shapes and window overlap") {
    const Gain full = Gain::constant(2.0);
    CHECK(full.evaluate(0.3, 0.9) == doctest::Approx(2.0));
    CHECK(full.window_overlap(0.2, 0.7) == doctest::Approx(0.5));
    CHECK(full.full_support());

    const Gain sp = Gain::spatial(1.0, 0.0, 0.5);
    CHECK(sp.evaluate(0.0, 0.25) == doctest::Approx(1.0));
    CHECK(sp.evaluate(0.0, 0.75) == 0.0);
    CHECK(sp.evaluate(0.0, 0.5) == doctest::Approx(1.0));
    CHECK_FALSE(sp.full_support());

    const Gain tw = Gain::temporal(1.0, 0.25, 0.75, 2.0);
    CHECK(tw.evaluate(0.1, 0.3) == 0.0);
    CHECK(tw.evaluate(0.5, 0.3) == doctest::Approx(1.0));
    CHECK(tw.evaluate_backward(0.5, 0.3) == doctest::Approx(2.0));
    CHECK(tw.window_overlap(0.0, 1.0) == doctest::Approx(0.5));
    CHECK(tw.window_overlap(0.5, 1.0) == doctest::Approx(0.25));
    CHECK(tw.window_overlap(0.8, 1.0) == 0.0);

    CHECK_THROWS_AS(Gain::constant(-1.0), PreconditionError);
    CHECK_THROWS_AS(Gain::spatial(1.0, 0.5, 0.5), PreconditionError);
    CHECK_THROWS_AS(Gain::constant(1.0, 0.0), PreconditionError);
}
