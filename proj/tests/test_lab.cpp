#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "carlab/error.hpp"
#include "carlab/family.hpp"
#include "carlab/lab.hpp"
#include "carlab/norms.hpp"
#include "carlab/spectral.hpp"
#include "carlab/zoo.hpp"
#include "oracle_values.hpp"
#include "support.hpp"

using namespace carlab;
using std::numbers::pi;

namespace {

const Exponents kGap = Exponents::from_p(4.0 / 3.0);
const GridSpec kRef = make_grid(1024, 32 * pi);

std::vector<double> t_range(int hi) {
    std::vector<double> ts;
    for (int t = 0; t <= hi; ++t) ts.push_back(t);
    return ts;
}

AnalyticField scaled(const AnalyticField& f, double c) {
    AnalyticField g = f;
    g.value = [f, c](cplx z) { return c * f.value(z); };
    g.dbar = [f, c](cplx z) { return c * f.dbar(z); };
    return g;
}

}  // namespace

TEST_CASE("empirical constants") {
    const auto c = EmpiricalConstant::from_series(
        "x", SweepAxis::t, {{0, 1.0, "a"}, {1, 3.0, "b"}, {2, 2.0, "c"}});
    CHECK(c.value == 3.0);
    CHECK(c.witness == "b");
    const auto d = EmpiricalConstant::from_series("y", SweepAxis::t, {{0, 1.0, "a"}, {1, NAN, "n"}});
    CHECK(std::isinf(d.value));
    CHECK(d.witness == "n");

    VerificationReport rep;
    rep.add_scalar("ok", 0.5, 1.0, CapProvenance::analytic);
    rep.finalize();
    CHECK(rep.pass);
    rep.add_scalar("bad", 2.0, 1.0, CapProvenance::refinement_oracle);
    rep.finalize();
    CHECK_FALSE(rep.pass);
    CHECK(rep.bound("bad").cap == 1.0);
    CHECK_THROWS_AS(rep.bound("nope"), Error);
}

TEST_CASE("carleman ratio") {
    const AnalyticField b = bump({1.0, 0.0}, 0.25);
    const GridSpec g = make_grid(512, 4.0);
    const double r0 = carleman_ratio(b, 0.0, kGap, g);
    CHECK(std::isfinite(r0));
    CHECK(testing::rel(carleman_ratio(b, 0.0, kGap, make_grid(1024, 4.0)),
                       oracle::carleman_baseline_r0) < 1e-9);
    CHECK(testing::rel(carleman_ratio(b, 16.0, kGap, g), oracle::carleman_fine_t16) < 1e-9);
    CHECK(testing::rel(carleman_ratio(scaled(b, 10.0), 3.0, kGap, g),
                       carleman_ratio(b, 3.0, kGap, g)) < 1e-12);

    // radial weight: rotating the support about the origin changes little
    const AnalyticField rot = bump(std::polar(1.0, pi / 3), 0.25);
    CHECK(testing::rel(carleman_ratio(rot, 4.0, kGap, g), carleman_ratio(b, 4.0, kGap, g)) < 0.01);

    CHECK_THROWS_AS(carleman_ratio(bump(0.0, 0.5), 1.0, kGap, g), Error);
    CHECK_NOTHROW(carleman_ratio(bump(0.0, 0.5), 0.0, kGap, g));
    CHECK_THROWS_AS(carleman_ratio(bump({-1.0, 0.0}, 0.25), 0.5, kGap, g), Error);
    CHECK_NOTHROW(carleman_ratio(b, 0.5, kGap, g));
    CHECK_THROWS_AS(carleman_ratio(zero_field(), 0.0, kGap, g), Error);
    CHECK_THROWS_AS(carleman_ratio(b, -1.0, kGap, g), Error);
}

TEST_CASE("carleman sweep") {
    const AnalyticField b = bump({1.0, 0.0}, 0.25);
    const auto ts = t_range(16);
    const VerificationReport rep = carleman_sweep(b, ts, kGap, make_grid(512, 4.0));
    CHECK(rep.pass);
    const Bound& c = rep.bound("carleman_ratio");
    CHECK(c.provenance == CapProvenance::refinement_oracle);
    CHECK(c.constant.series.size() == 17);
    CHECK(testing::rel(rep.metrics.at("coarse_max_ratio"), oracle::carleman_coarse_max) < 1e-9);
    CHECK(testing::rel(c.cap, kCalibrationFactor * oracle::carleman_coarse_max) < 1e-9);
    CHECK(testing::rel(c.constant.value, oracle::carleman_fine_max) < 1e-9);
    CHECK(c.constant.value <= rep.metrics.at("coarse_max_ratio") * 1.25);
    CHECK(rep.bound("tail_log_slope").constant.value ==
          doctest::Approx(oracle::carleman_tail_slope).epsilon(1e-6));
    CHECK(rep.metrics.at("envelope_violations") == 0.0);

    // annulus support 1 <= |z| <= 2
    const VerificationReport ann =
        carleman_sweep(bump({1.5, 0.0}, 0.5), t_range(6), kGap, make_grid(256, 4.0), 100.0);
    CHECK(ann.metrics.at("envelope_violations") == 0.0);
    CHECK(ann.bound("carleman_ratio").provenance == CapProvenance::analytic);

    CHECK_THROWS_AS(carleman_sweep(b, std::vector<double>{}, kGap, make_grid(256, 4.0)), Error);
    const VerificationReport tiny = carleman_sweep(b, std::vector<double>{0.0, 1.0}, kGap,
                                                   make_grid(256, 4.0));
    CHECK(tiny.notes.size() == 1);
}

TEST_CASE("commutation residual") {
    const AnalyticField f = bump({2.0, 0.0}, 0.5);
    const double half512 = commutation_residual(f, 0.5, make_grid(512, 6.0));
    const double half1024 = commutation_residual(f, 0.5, make_grid(1024, 6.0));
    CHECK(std::isfinite(half512));
    CHECK(half1024 < half512);
    CHECK_THROWS_AS(commutation_residual(bump({-2.0, 0.0}, 0.5), 0.5, make_grid(256, 6.0)), Error);
    CHECK_THROWS_AS(commutation_residual(bump(0.0, 0.5), 2.0, make_grid(256, 6.0)), Error);
}

TEST_CASE("kernel L2 bound") {
    const LPFamily fam = lp_family(-3, 3);
    const MultiplierSpec spec{kRef.freq_spacing()};
    const double expected[] = {oracle::kernel_l2_km3, oracle::kernel_l2_km2, oracle::kernel_l2_km1,
                               oracle::kernel_l2_kp0,  oracle::kernel_l2_kp1, oracle::kernel_l2_kp2,
                               oracle::kernel_l2_kp3};
    const std::vector<int> ks = {-3, -2, -1, 0, 1, 2, 3};
    const VerificationReport rep = kernel_bound_sweep(spec, fam, ks, kRef);
    CHECK(rep.pass);
    const Bound& b = rep.bound("kernel_l2");
    for (std::size_t i = 0; i < ks.size(); ++i) {
        CHECK(testing::rel(b.constant.series[i].ratio, expected[i]) < 1e-9);
    }
    CHECK(b.cap == doctest::Approx(annulus_cap() * 1.05));
    CHECK(annulus_cap() == doctest::Approx(2.9513).epsilon(1e-4));
    CHECK(testing::rel(expected[3], oracle::kernel_l2_continuum) < 1e-6);
    CHECK(rep.bound("k_spread").constant.value <= 0.02);

    // cutoff above the band removes it entirely
    const VerificationReport dead = kernel_l2_bound({2.0}, fam, 0, kRef);
    CHECK(dead.bound("kernel_l2").constant.value <= 1e-12);

    // profile insensitivity with the cutoff sitting on the band's inner half
    const double q = kernel_l2_bound({0.5, CutoffProfile::quintic_smoothstep}, fam, 0, kRef)
                         .bound("kernel_l2").constant.value;
    const double e = kernel_l2_bound({0.5, CutoffProfile::exp_mollifier}, fam, 0, kRef)
                         .bound("kernel_l2").constant.value;
    CHECK(testing::rel(e, q) < 0.10);
    CHECK(testing::rel(kernel_l2_bound({kRef.freq_spacing(), CutoffProfile::exp_mollifier}, fam, 0,
                                       kRef).bound("kernel_l2").constant.value,
                       oracle::kernel_l2_exp_k0) < 1e-9);

    CHECK_THROWS_AS(kernel_l2_bound(spec, fam, 3, make_grid(256, 8 * pi)), Error);
}

TEST_CASE("young at the gap") {
    const GridSpec g = make_grid(256, 8 * pi);
    const LPFamily fam = lp_family(-2, 1);
    const Field K = kernel_Tk({g.freq_spacing()}, fam, 0, g);

    std::vector<cplx> spike(g.size());
    spike[g.size() / 2 + 17] = 1.0;
    const VerificationReport s = young_check(K, Field(g, std::move(spike), Space::position), kGap);
    CHECK(s.pass);
    CHECK(s.bound("young_ratio").constant.value < 0.5);

    const VerificationReport z = young_check(Field(g, Space::position), make_input("noise", g, 1), kGap);
    CHECK(z.pass);
    CHECK(z.bound("young_ratio").constant.value == 0.0);

    Rng rng(2024);
    for (int i = 0; i < 20; ++i) {
        const double center = std::ldexp(1.0, -(i % 3));
        const Field h = random_band_limited(g, center, 4.0 / center, rng);
        const VerificationReport r = young_check(K, h, kGap);
        REQUIRE(r.pass);
        CHECK(r.bound("young_ratio").constant.value <= 1.0 + kYoungSlack);
    }
    CHECK_THROWS_AS(young_check(K, make_input("noise", make_grid(128, 8 * pi), 1), kGap), Error);
}

TEST_CASE("T_k operator ratio") {
    const LPFamily fam = lp_family(-3, 3);
    const MultiplierSpec spec{kRef.freq_spacing()};
    const auto family = standard_family(kRef, 0, 1);
    CHECK(family.size() == 17);
    const EmpiricalConstant c = tk_operator_ratio(spec, fam, 0, kGap, family);
    CHECK(testing::rel(c.value, oracle::tk_max_kp0) < 1e-9);
    CHECK_FALSE(c.witness.empty());

    // scale invariance in the input
    std::vector<TestInput> times3;
    for (const auto& m : family) times3.push_back({m.label, cplx{0.0, 3.0} * m.field});
    CHECK(testing::rel(tk_operator_ratio(spec, fam, 0, kGap, times3).value, c.value) < 1e-12);

    // single in-band exponential: eigenvalue over the grid-norm ratio of |e| = 1
    const int m = 32;  // |zeta| = 1 at Delta = 1/32
    const std::vector<TestInput> one = {{"exp", lattice_exponential(kRef, m, 0)}};
    const double area = std::pow(2 * kRef.half_width(), 2);
    const double expected = 1.0 * std::pow(area, 1.0 / kGap.q() - 1.0 / kGap.p());
    CHECK(tk_operator_ratio(spec, fam, 0, kGap, one).value >= expected * (1 - 1e-9));

    const std::vector<TestInput> out = {{"far", lattice_exponential(kRef, 3, 0)}};
    CHECK(tk_operator_ratio(spec, fam, 0, kGap, out).value <= 1e-10);

    CHECK_THROWS_AS(tk_operator_ratio(spec, fam, 0, kGap, std::vector<TestInput>{}), Error);
    const std::vector<TestInput> zero = {{"zero", Field(kRef, Space::position)}};
    CHECK_THROWS_AS(tk_operator_ratio(spec, fam, 0, kGap, zero), Error);
    CHECK_THROWS_AS(tk_operator_ratio(spec, fam, -3, kGap, one), Error);
}

TEST_CASE("T_k uniformity report") {
    const GridSpec g = make_grid(256, 8 * pi);
    const LPFamily fam = lp_family(-3, 3);
    const std::vector<int> ks = {-1, 0};
    const VerificationReport rep = tk_uniformity(
        {g.freq_spacing()}, fam, ks, kGap, [&](int k) { return standard_family(g, k, 1); });
    CHECK(rep.pass);
    CHECK(rep.bound("k_spread").constant.value <= 0.10);

    const VerificationReport weak = tk_uniformity(
        {g.freq_spacing()}, fam, ks, kGap, [&](int k) {
            return std::vector<TestInput>{{"exp", lattice_exponential(g, 8 << (k < 0 ? 1 : 0), 0)}};
        });
    bool flagged = false;
    for (const auto& n : weak.notes) flagged |= n.find("weak coverage") != std::string::npos;
    CHECK(flagged);
}

TEST_CASE("full operator over a delta sweep") {
    const auto family = standard_family(kRef, -2, 1);
    const std::vector<double> deltas = {8 * kRef.freq_spacing()};
    const VerificationReport one = t_operator_ratio(kGap, family, deltas);
    CHECK(one.observations.back().series.size() == 1);
    CHECK(testing::rel(one.observations.back().value, oracle::t_max_delta8) < 1e-9);
    CHECK(one.pass);

    const std::vector<TestInput> zeros = {{"zero", Field(kRef, Space::position)}};
    CHECK_THROWS_AS(t_operator_ratio(kGap, zeros, deltas), Error);
    CHECK_THROWS_AS(t_operator_ratio(kGap, family, std::vector<double>{}), Error);
}

TEST_CASE("littlewood-paley chain") {
    const LPFamily fam = lp_family(-2, 2);
    const MultiplierSpec spec{kRef.freq_spacing()};
    const Field h = make_input("bands:-1,0,1", kRef, 1);
    const VerificationReport rep = lp_chain_report(h, spec, fam, kGap);
    CHECK(rep.pass);
    CHECK(testing::rel(rep.bound("lp_upper").constant.value, oracle::chain_lp_upper) < 1e-9);
    CHECK(testing::rel(rep.bound("minkowski_q").constant.value, oracle::chain_minkowski_q) < 1e-9);
    CHECK(testing::rel(rep.bound("young").constant.value, oracle::chain_young) < 1e-9);
    CHECK(testing::rel(rep.bound("minkowski_p").constant.value, oracle::chain_minkowski_p) < 1e-9);
    CHECK(testing::rel(rep.bound("lp_lower").constant.value, oracle::chain_lp_lower) < 1e-9);
    CHECK(testing::rel(rep.metrics.at("coarse_lp_upper"), oracle::chain_coarse_lp_upper) < 1e-9);
    CHECK(testing::rel(rep.metrics.at("coarse_young"), oracle::chain_coarse_young) < 1e-9);
    CHECK(testing::rel(rep.metrics.at("coarse_lp_lower"), oracle::chain_coarse_lp_lower) < 1e-9);
    CHECK(rep.bound("minkowski_q").cap == 1.0 + kMinkowskiSlack);

    // one band: everything but the Young link is an equality
    const VerificationReport single = lp_chain_report(make_input("ring:0", kRef, 1), spec, fam, kGap);
    for (const char* name : {"lp_upper", "minkowski_q", "minkowski_p", "lp_lower"}) {
        CHECK(std::abs(single.bound(name).constant.value - 1.0) < 1e-9);
    }

    // leakage is rejected, not truncated
    CHECK_THROWS_AS(lp_chain_report(make_input("noise", kRef, 1), spec, fam, kGap), LeakageError);
}

TEST_CASE("hoelder at the gap") {
    const GridSpec g = make_grid(1024, 2.0);
    const Potential v = radial_power_potential(0.5, 1.0, 1.0);
    const Field u = sample(g, bump({0.6, 0.0}, 0.3));
    const VerificationReport rep = holder_gap_check(v, u, 3.0, 0.25, kGap, 2 * g.spacing());
    CHECK(rep.pass);
    CHECK(testing::rel(rep.metrics.at("V_l2_ball"), oracle::holder_ball_quarter) < 1e-12);
    CHECK(testing::rel(rep.metrics.at("V_l2_ball"), std::sqrt(pi / 2)) < 0.02);

    // equality: constant V and constant |u| on the ball
    const GridSpec c = make_grid(256, 2.0);
    const Field ones = sample(c, [](cplx) { return cplx{1.0}; });
    const VerificationReport eq =
        holder_gap_check(radial_power_potential(0.0, 2.0, 3.0), ones, 0.0, 1.0, kGap, 0.0);
    CHECK(std::abs(eq.bound("holder_ratio").constant.value - 1.0) < 1e-12);

    for (const char* vl : {"vpow:0.5,1,1", "vpow:0,0.5,2", "vring:0.5,1,1.5"}) {
        for (const char* fl : {"bump:1,0,0.25", "holo:2,0.5,0.5,0.3", "bump:0.4,-0.2,0.2"}) {
            const VerificationReport r =
                holder_gap_check(parse_potential(vl), sample(c, parse_field(fl)), 2.0, 1.5, kGap,
                                 2 * c.spacing());
            REQUIRE(r.pass);
        }
    }
    CHECK_THROWS_AS(holder_gap_check(v, ones, 1.0, 1.0, kGap, 2 * c.spacing()), Error);
    CHECK_THROWS_AS(holder_gap_check(v, u, 1.0, 3.0, kGap, 2 * g.spacing()), Error);
}
