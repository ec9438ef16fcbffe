#include <doctest.h>

#include <cmath>

#include "test_util.hpp"
#include "tfplasma/ecflux.hpp"
#include "tfplasma/errors.hpp"

using namespace tfp;
using namespace tfp::test;

TEST_CASE("log mean: exact values and the equal-argument limit") {
    CHECK(log_mean(3.7, 3.7) == 3.7);
    CHECK(log_mean(1.0, std::exp(1.0)) == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
    CHECK(log_mean(1.0, 3.0) == doctest::Approx(2.0 / std::log(3.0)).epsilon(1e-14));
    CHECK_THROWS_AS(log_mean(-1.0, 2.0), AdmissibilityError);
    CHECK_THROWS_AS(log_mean(1.0, 0.0), AdmissibilityError);
}

TEST_CASE("log mean: bounded by and monotone in its arguments") {
    Rng rng(23);
    for (int n = 0; n < 2000; ++n) {
        const double a = log_uniform(rng, 1e-6, 1e6);
        const double b = log_uniform(rng, 1e-6, 1e6);
        const double m = log_mean(a, b);
        CHECK(m >= std::min(a, b));
        CHECK(m <= std::max(a, b));
        CHECK(log_mean(a, b) == log_mean(b, a));
        const double h = 1e-3 * b;
        CHECK(log_mean(a, b + h) >= m);
    }
}

TEST_CASE("log mean: series branch agrees with the exact formula near 1") {
    // Reference evaluated in extended precision; the plain double formula
    // loses digits to cancellation exactly where the series branch lives.
    auto reference = [](double a, double b) {
        const long double la = a;
        const long double lb = b;
        return static_cast<double>((lb - la) / std::log1p((lb - la) / la));
    };
    for (double ratio : {1.0 + 1e-4, 1.0 - 1e-4, 1.0 + 1e-3, 1.0 - 1e-3}) {
        for (double a : {1e-3, 1.0, 1e3}) {
            const double b = a * ratio;
            CHECK(log_mean(a, b) == doctest::Approx(reference(a, b)).epsilon(1e-14));
        }
    }
    // Either side of the branch threshold evaluates consistently.
    for (double ratio : {1.0 + 0.99e-2, 1.0 + 1.01e-2}) {
        const double a = 2.0;
        const double b = a * ratio;
        CHECK(log_mean(a, b) == doctest::Approx(reference(a, b)).epsilon(1e-14));
    }
}

namespace {

ConsState uniform_state(double rho, double vx, double p, const PhysParams& params) {
    PrimState q{};
    q.rho_i = q.rho_e = rho;
    q.v_i = q.v_e = {vx, 0.0, 0.0};
    q.p_i = q.p_e = p;
    q.B = q.E = {0.0, 0.0, 0.0};
    return prim_to_cons(q, params);
}

} // namespace

TEST_CASE("fluid flux consistency: equal states give the exact flux") {
    PhysParams params;
    const ConsState u = uniform_state(2.0, 1.0, 1.0, params);
    const Vec5 f = ec_flux_fluid(u, u, Axis::X, Species::Ion, params);
    CHECK(f[0] == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(f[1] == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(f[2] == doctest::Approx(0.0));
    CHECK(f[3] == doctest::Approx(0.0));
    CHECK(f[4] == doctest::Approx(3.5).epsilon(1e-13));
}

TEST_CASE("full flux consistency against the physical flux") {
    PhysParams params;
    params.c_hat = 4.0;
    params.xi = 1.2;
    params.kappa = 0.7;
    Rng rng(31);
    for (int n = 0; n < 100; ++n) {
        const ConsState u = random_state(rng, params);
        for (Axis dir : {Axis::X, Axis::Y}) {
            const Vec18 fec = ec_flux(u, u, dir, params);
            const Vec18 fex = physical_flux(u, dir, params);
            for (int k = 0; k < n_vars; ++k) {
                CHECK(fec[static_cast<std::size_t>(k)] ==
                      doctest::Approx(fex[static_cast<std::size_t>(k)])
                          .epsilon(1e-13)
                          .scale(std::abs(fex[static_cast<std::size_t>(k)]) + 1.0));
            }
        }
    }
}

TEST_CASE("electromagnetic flux average") {
    PhysParams params;
    params.xi = 1.0;
    PrimState ql{};
    ql.rho_i = ql.rho_e = 1.0;
    ql.p_i = ql.p_e = 1.0;
    ql.E = {1.0, 0.0, 0.0};
    PrimState qr = ql;
    qr.E = {3.0, 0.0, 0.0};
    const ConsState l = prim_to_cons(ql, params);
    const ConsState r = prim_to_cons(qr, params);
    const Vec8 f = ec_flux_maxwell(l, r, Axis::X, params);
    CHECK(f[6] == doctest::Approx(2.0).epsilon(1e-14));  // phi row carries xi*avg(Ex)
}

TEST_CASE("pair overload matches the three-argument form") {
    PhysParams params;
    Rng rng(29);
    const ConsState a = random_state(rng, params);
    const ConsState b = random_state(rng, params);
    const InterfacePair pair{a, b, Axis::Y};
    CHECK(max_abs_diff(ec_flux(pair, params), ec_flux(a, b, Axis::Y, params)) == 0.0);
}

TEST_CASE("flux is symmetric in its arguments") {
    PhysParams params;
    Rng rng(37);
    for (int n = 0; n < 200; ++n) {
        const ConsState a = random_state(rng, params);
        const ConsState b = random_state(rng, params);
        for (Axis dir : {Axis::X, Axis::Y}) {
            const Vec18 fab = ec_flux(a, b, dir, params);
            const Vec18 fba = ec_flux(b, a, dir, params);
            CHECK(max_abs_diff(fab, fba) == 0.0);
        }
    }
}

namespace {

// Interface identity residual |[V].F - [chi]| for one direction.
double tadmor_residual(const ConsState& l, const ConsState& r, Axis dir,
                       const PhysParams& params) {
    const Vec18 f = ec_flux(l, r, dir, params);
    const EntropyVars vl = entropy_vars(l, params);
    const EntropyVars vr = entropy_vars(r, params);
    const EntropyTriple cl = entropy_potential(l, dir, params);
    const EntropyTriple cr = entropy_potential(r, dir, params);
    long double acc = 0.0L;
    for (int k = 0; k < n_vars; ++k) {
        acc += static_cast<long double>(vr[static_cast<std::size_t>(k)] -
                                        vl[static_cast<std::size_t>(k)]) *
               static_cast<long double>(f[static_cast<std::size_t>(k)]);
    }
    const long double jump_chi =
        (static_cast<long double>(cr.ion) + cr.electron + cr.em) -
        (static_cast<long double>(cl.ion) + cl.electron + cl.em);
    return static_cast<double>(std::abs(acc - jump_chi));
}

} // namespace

TEST_CASE("interface flux matches the potential jump") {
    PhysParams params;
    params.lambda_m = 25.0;
    Rng rng(41);
    for (int n = 0; n < 2000; ++n) {
        const ConsState l = random_state(rng, params);
        const ConsState r = random_state(rng, params);
        CHECK(tadmor_residual(l, r, Axis::X, params) < 1e-11);
        CHECK(tadmor_residual(l, r, Axis::Y, params) < 1e-11);
    }
}

TEST_CASE("per-block interface identity") {
    PhysParams params;
    Rng rng(43);
    for (int n = 0; n < 500; ++n) {
        const ConsState l = random_state(rng, params);
        const ConsState r = random_state(rng, params);
        for (Axis dir : {Axis::X, Axis::Y}) {
            const EntropyVars vl = entropy_vars(l, params);
            const EntropyVars vr = entropy_vars(r, params);
            const EntropyTriple cl = entropy_potential(l, dir, params);
            const EntropyTriple cr = entropy_potential(r, dir, params);

            const Vec5 fi = ec_flux_fluid(l, r, dir, Species::Ion, params);
            double acc = 0.0;
            for (int k = 0; k < 5; ++k) {
                acc += (vr[static_cast<std::size_t>(k)] - vl[static_cast<std::size_t>(k)]) *
                       fi[static_cast<std::size_t>(k)];
            }
            CHECK(std::abs(acc - (cr.ion - cl.ion)) < 1e-11);

            const Vec8 fm = ec_flux_maxwell(l, r, dir, params);
            double accm = 0.0;
            for (int k = 0; k < 8; ++k) {
                accm += (vr[static_cast<std::size_t>(10 + k)] - vl[static_cast<std::size_t>(10 + k)]) *
                        fm[static_cast<std::size_t>(k)];
            }
            CHECK(std::abs(accm - (cr.em - cl.em)) < 1e-11);
        }
    }
}
