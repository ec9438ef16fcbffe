#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_util.hpp"
#include "tfplasma/errors.hpp"
#include "tfplasma/lab.hpp"

using namespace tfp;
using namespace tfp::test;

namespace {

struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const std::string& tag) {
        path = std::filesystem::temp_directory_path() / ("tfplasma_" + tag);
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string str() const { return path.string(); }
};

} // namespace

TEST_CASE("forced travelling-wave scenario") {
    ScenarioSetup s = build_manufactured(10);
    CHECK(s.field.grid.nx == 10);
    CHECK(s.params.lambda_m == 2.0);
    // Debye length is tied to the Larmor radius so the forcing closes.
    CHECK(s.params.lambda_hat_d * s.params.lambda_hat_d * s.params.r_hat_g ==
          doctest::Approx(1.0).epsilon(1e-12));

    // x = 0.25 is the centre of cell 2 on a 10-cell unit grid.
    CHECK(s.field.grid.x_center(2) == doctest::Approx(0.25));
    CHECK(s.field.at(2, 0)[RHO_I] == doctest::Approx(3.0).epsilon(1e-14));

    const Vec18 k0 = s.forcing(0.0, 0.0, 0.0);
    CHECK(k0[EX] == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(k0[PHI] == doctest::Approx(2.0).epsilon(1e-14));
    for (int k = 0; k < n_vars; ++k) {
        if (k != EX && k != PHI) CHECK(k0[static_cast<std::size_t>(k)] == 0.0);
    }

    CHECK(s.exact_density(0.4, 0.15) == doctest::Approx(s.exact_density(0.25, 0.0)));
}

TEST_CASE("soliton scenario: hump, pressures, neutrality") {
    ScenarioSetup s = build_soliton1d(150, 1e-2);
    CHECK(s.params.lambda_m == 25.0);
    CHECK(s.params.lambda_hat_d == 1.0);
    const Grid& g = s.field.grid;
    double peak = 0.0;
    for (int i = 0; i < g.nx; ++i) {
        const double x = g.x_center(i);
        const ConsState& u = s.field.at(i, 0);
        CHECK(u[RHO_I] ==
              doctest::Approx(1.0 + std::exp(-25.0 * std::abs(x - 4.0))).epsilon(1e-13));
        CHECK(u[RHO_E] == doctest::Approx(u[RHO_I] / 25.0).epsilon(1e-13));
        const PrimState q = cons_to_prim(u, s.params);
        CHECK(q.p_i / q.p_e == doctest::Approx(0.01).epsilon(1e-12));
        CHECK(q.p_e == doctest::Approx(5.0 * q.rho_i).epsilon(1e-12));
        peak = std::max(peak, u[RHO_I]);
    }
    // nearest cell centre sits dx/2 - but never exactly - on the hump crest
    double best = 12.0;
    for (int i = 0; i < g.nx; ++i) best = std::min(best, std::abs(g.x_center(i) - 4.0));
    CHECK(peak == doctest::Approx(1.0 + std::exp(-25.0 * best)).epsilon(1e-12));
}

TEST_CASE("shock tube scenario") {
    ScenarioSetup s = build_briowu(100, 10.0);
    CHECK(s.params.lambda_m == 1836.0);
    CHECK(s.params.lambda_hat_d == 0.01);
    const PrimState l = cons_to_prim(s.field.at(10, 0), s.params);
    const PrimState r = cons_to_prim(s.field.at(90, 0), s.params);
    CHECK(l.B[1] == doctest::Approx(1.0));
    CHECK(r.B[1] == doctest::Approx(-1.0));
    CHECK(l.B[0] == doctest::Approx(0.75));
    CHECK(l.p_i == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(r.p_i == doctest::Approx(0.05).epsilon(1e-13));
    CHECK(l.rho_e / l.rho_i == doctest::Approx(1.0 / 1836.0).epsilon(1e-13));
    CHECK(s.field.bc[X_LOW] == BoundaryCondition::ZeroGradient);
}

TEST_CASE("radial hump scenario") {
    ScenarioSetup s = build_soliton2d(50, 50, 1e-2);
    const Grid& g = s.field.grid;
    double peak = 0.0;
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) peak = std::max(peak, s.field.at(i, j)[RHO_I]);
    }
    double best = 4.0;
    for (int i = 0; i < g.nx; ++i) {
        const double d = std::abs(g.x_center(i) - 1.0);
        best = std::min(best, 2.0 * d * d);
    }
    CHECK(peak == doctest::Approx(1.0 + 5.0 * std::exp(-500.0 * best)).epsilon(1e-12));
    CHECK(s.field.at(0, 0)[RHO_I] == doctest::Approx(1.0).epsilon(1e-12));
    // mirrored cells about the diagonal carry the same density
    CHECK(s.field.at(30, 10)[RHO_I] == doctest::Approx(s.field.at(10, 30)[RHO_I]).epsilon(1e-13));
}

TEST_CASE("ion-density L1 distance") {
    ScenarioSetup s = build_manufactured(64);
    CHECK(l1_error(s.field, s.exact_density, 0.0) == doctest::Approx(0.0));

    Field shifted = s.field;
    for (int i = 0; i < 64; ++i) shifted.at(i, 0)[RHO_I] += 0.25;
    CHECK(l1_error(shifted, s.exact_density, 0.0) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("config parsing") {
    TempDir dir("config");
    const std::string path = dir.str() + "/run.cfg";
    {
        std::ofstream out(path);
        out << "# experiment configuration\n"
               "scenario = soliton1d\n"
               "nx = 300            # cells\n"
               "stepper = imex\n"
               "rk_order = 3\n"
               "t_end = 0.2\n"
               "r_hat_g = 1e-4\n";
    }
    const ConfigPairs pairs = read_config_pairs(path);
    const ScenarioConfig cfg = make_config(pairs);
    CHECK(cfg.scenario == ScenarioKind::Soliton1d);
    CHECK(cfg.nx == 300);
    CHECK(cfg.stepper == StepperKind::Imex);
    CHECK(cfg.rk_order == 3);
    CHECK(cfg.t_end == doctest::Approx(0.2));
    CHECK(cfg.phys_overrides.at("r_hat_g") == doctest::Approx(1e-4));

    ConfigPairs with_override = pairs;
    with_override.emplace_back("nx", "500");
    CHECK(make_config(with_override).nx == 500);  // later pairs win

    ConfigPairs unknown = pairs;
    unknown.emplace_back("typo_key", "1");
    CHECK_THROWS_AS(make_config(unknown), ConfigError);

    ConfigPairs bad = pairs;
    bad.emplace_back("cfl", "fast");
    CHECK_THROWS_AS(make_config(bad), ConfigError);

    ConfigPairs nocfl = {{"nx", "100"}};
    CHECK_THROWS_AS(make_config(nocfl), ConfigError);  // scenario is required
}

TEST_CASE("snapshot round trip is bit-exact") {
    PhysParams params;
    params.lambda_m = 25.0;
    ScenarioSetup s = build_soliton1d(40, 1e-2);
    TempDir dir("snap");
    const std::string p1 = dir.str() + "/a.csv";
    const std::string p2 = dir.str() + "/b.csv";

    write_snapshot(s.field, s.params, p1);
    const Field back = read_snapshot(p1, s.field.grid, s.field.bc, s.params);
    write_snapshot(back, s.params, p2);

    std::ifstream f1(p1), f2(p2);
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    CHECK(s1.str() == s2.str());
    CHECK(!s1.str().empty());

    // Re-ingested primitive values are bitwise identical.
    for (int i = 0; i < 40; ++i) {
        const PrimState qa = cons_to_prim(s.field.at(i, 0), s.params);
        const PrimState qb = cons_to_prim(back.at(i, 0), s.params);
        CHECK(qa.rho_i == qb.rho_i);
        CHECK(qa.p_i == qb.p_i);
        CHECK(qa.rho_e == qb.rho_e);
        CHECK(qa.p_e == qb.p_e);
        for (std::size_t k = 0; k < 3; ++k) {
            CHECK(qa.v_i[k] == qb.v_i[k]);
            CHECK(qa.v_e[k] == qb.v_e[k]);
            CHECK(qa.B[k] == qb.B[k]);
            CHECK(qa.E[k] == qb.E[k]);
        }
    }
}

TEST_CASE("a short run produces outputs and a sane series") {
    TempDir dir("run");
    ConfigPairs pairs = {{"scenario", "manufactured"}, {"nx", "32"},
                         {"order", "2"},               {"rk_order", "2"},
                         {"stepper", "explicit"},      {"t_end", "0.02"},
                         {"cfl", "0.45"},              {"output_dir", dir.str()},
                         {"snapshot_interval", "0.01"}};
    const ScenarioConfig cfg = make_config(pairs);
    const RunReport report = run(cfg);

    CHECK(report.steps_taken > 0);
    CHECK(report.final_l1_error.has_value());
    CHECK(*report.final_l1_error < 0.05);
    CHECK(report.series.size() == static_cast<std::size_t>(report.steps_taken + 1));
    for (std::size_t n = 1; n < report.series.size(); ++n) {
        CHECK(report.series[n].t > report.series[n - 1].t);
        CHECK(report.series[n].dt > 0.0);
    }
    CHECK(std::filesystem::exists(dir.path / "series.csv"));
    CHECK(std::filesystem::exists(dir.path / "snap_0.csv"));
    CHECK(std::filesystem::exists(dir.path / "snap_1.csv"));  // interval snapshot

    // Periodic, forced only in EM slots: ion mass stays constant.
    const double m0 = report.series.front().mass_i;
    const double m1 = report.series.back().mass_i;
    CHECK(std::abs(m1 - m0) <= 1e-11 * std::abs(m0));
}

TEST_CASE("sweep rows carry the report") {
    RunReport r;
    r.steps_taken = 7;
    r.wall_seconds = 0.5;
    r.series.push_back({0.1, 0.01, 1.0, 2.0, 3.0, 4.0, 5.0});
    const std::string header = sweep_csv_header("r_hat_g");
    CHECK(header.find("r_hat_g") == 0);
    const std::string row = sweep_csv_row(0.01, r);
    CHECK(row.find("7") != std::string::npos);
    CHECK(row.find("0.01") == 0);
}

TEST_CASE("step failures surface the failing cell") {
    ScenarioSetup s = build_soliton1d(32, 1e-2);
    // Poison one cell so the first flux evaluation trips admissibility.
    s.field.at(5, 0)[EN_I] = -1.0;
    ConfigPairs pairs = {{"scenario", "soliton1d"}, {"nx", "32"}, {"t_end", "0.1"},
                         {"stepper", "explicit"}};
    const ScenarioConfig cfg = make_config(pairs);
    (void)cfg;
    const SpatialOp rhs_op = [&s](Field& f, double t) {
        fill_ghosts(f);
        return spatial_rhs(f, 2, nullptr, t, s.params);
    };
    CHECK_THROWS_AS(explicit_step(s.field, 0.0, 1e-4, tableau(2), rhs_op, s.params, true),
                    StepFailure);
}

TEST_CASE("imex step counts do not depend on the Larmor radius") {
    TempDir dir("counts");
    auto steps_for = [&](const char* rg) {
        ConfigPairs pairs = {{"scenario", "soliton1d"}, {"nx", "100"},
                             {"order", "2"},            {"rk_order", "3"},
                             {"stepper", "imex"},       {"cfl", "0.45"},
                             {"t_end", "0.05"},         {"r_hat_g", rg},
                             {"output_dir", dir.str() + "/" + rg}};
        return run(make_config(pairs)).steps_taken;
    };
    const long a = steps_for("1e-2");
    const long b = steps_for("1e-4");
    CHECK(a == b);
    CHECK(a > 0);
}
