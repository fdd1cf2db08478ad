#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "mlab/sweep.hpp"

using namespace mlab;

namespace {

SweepConfig disc_config(int count = 3) {
    SweepConfig cfg;
    cfg.axis1 = {"epsilon", 0.0, 2.0, count};
    cfg.axis2 = {"j0", 0.0, 2.0, count};
    cfg.fixed_omega0_sq = 1.0;
    return cfg;
}

}  // namespace

TEST_CASE("config validation names the offending field") {
    SweepConfig cfg = disc_config();
    cfg.axis1.count = 1;
    CHECK_THROWS_WITH_AS(validate_map_config(cfg), doctest::Contains("axis1.count"),
                         ConfigError);
    cfg = disc_config();
    cfg.axis2.min = 3.0;
    CHECK_THROWS_WITH_AS(validate_map_config(cfg), doctest::Contains("axis2.min"),
                         ConfigError);
    cfg = disc_config();
    cfg.axis2.name = "epsilon";
    CHECK_THROWS_AS(validate_map_config(cfg), ConfigError);
    cfg = disc_config();
    cfg.axis1.name = "omega0";
    cfg.axis2.name = "omega0_sq";
    CHECK_THROWS_AS(validate_map_config(cfg), ConfigError);
    cfg = disc_config();
    cfg.axis1.name = "coupling";
    CHECK_THROWS_AS(validate_map_config(cfg), ConfigError);

    SweepConfig dyn;
    dyn.horizon = -1.0;
    CHECK_THROWS_WITH_AS(validate_dynamics_config(dyn), doctest::Contains("horizon"),
                         ConfigError);
    dyn.horizon = kPi;
    dyn.samples = 1;
    CHECK_THROWS_WITH_AS(validate_dynamics_config(dyn), doctest::Contains("samples"),
                         ConfigError);
}

TEST_CASE("boundness grid over the unit disc") {
    const SweepConfig cfg = disc_config(3);  // lattice {0,1,2}^2
    const auto cells = boundness_grid(cfg);
    REQUIRE(cells.size() == 9);
    int bounded = 0;
    for (const GridCell& c : cells) {
        const bool in_disc = c.coord1 * c.coord1 + c.coord2 * c.coord2 < 1.0;
        CHECK(c.bounded == in_disc);
        bounded += c.bounded;
    }
    CHECK(bounded == 1);  // only (0,0)

    SweepConfig fine = disc_config(5);  // includes (0.5, 0.5)
    const auto cells5 = boundness_grid(fine);
    bool found = false;
    for (const GridCell& c : cells5)
        if (c.coord1 == 0.5 && c.coord2 == 0.5) {
            CHECK(c.bounded);
            found = true;
        }
    CHECK(found);
}

TEST_CASE("stability grid classes") {
    SweepConfig cfg;
    cfg.axis1 = {"epsilon", 0.0, 0.1, 2};
    cfg.axis2 = {"j0", 0.0, 1.5, 2};
    cfg.fixed_omega0_sq = 1.01;
    const auto cells = stability_grid(cfg);
    REQUIRE(cells.size() == 4);
    // (0, 0): the stable anchor; (0.1, 0): unstable; j0 = 1.5 rows: unbounded
    for (const GridCell& c : cells) {
        if (c.coord2 == 1.5) {
            CHECK(c.cls == CellClass::unbounded);
        } else if (c.coord1 == 0.0) {
            CHECK(c.cls == CellClass::stable);
        } else {
            CHECK(c.cls == CellClass::unstable);
        }
    }
}

TEST_CASE("boundary points are excluded by the strict disc") {
    SweepConfig cfg;
    cfg.axis1 = {"epsilon", 1.0, 2.0, 2};  // epsilon = 1 on the boundary circle
    cfg.axis2 = {"j0", 0.0, 1.0, 2};
    cfg.fixed_omega0_sq = 1.0;
    const auto cells = stability_grid(cfg);
    for (const GridCell& c : cells) CHECK(c.cls == CellClass::unbounded);
}

TEST_CASE("omega0 axis squares its coordinate") {
    SweepConfig cfg;
    cfg.axis1 = {"epsilon", 0.0, 0.1, 2};
    cfg.axis2 = {"omega0", 1.0, 2.0, 2};
    const auto p = point_at(cfg, 0, 1);
    CHECK(p.omega0_sq == 4.0);
    const auto cells = stability_grid(cfg);
    CHECK(cells.size() == 4);
}

TEST_CASE("sample times snap quench instants") {
    const auto ts = sample_times(kPi, 1000);
    REQUIRE(ts.size() == 1000);
    CHECK(ts.front() == 0.0);
    bool has_half = false;
    for (double t : ts) has_half = has_half || t == kHalfPeriod;
    CHECK(has_half);
    for (size_t i = 1; i < ts.size(); ++i) CHECK(ts[i] > ts[i - 1]);
}

TEST_CASE("dynamics series schema and content") {
    const OscillatorParams a_point{1.01, 0.0, 0.0};
    const auto rows = dynamics_series(a_point, kPi, 200);
    REQUIRE(rows.size() == 200);
    for (const ObservableRecord& r : rows) {
        CHECK(std::abs(r.n1) < 1e-12);
        CHECK(std::abs(r.n2) < 1e-12);
        CHECK(r.e_n == 0.0);
    }

    std::ostringstream os;
    write_dynamics_csv(os, rows);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "t,h1,h2,nu1,nu2,N1,N2,M12,mu,lambda_min,E_N");
    int count = 0;
    while (std::getline(is, line)) {
        ++count;
        CHECK(std::count(line.begin(), line.end(), ',') == 10);
    }
    CHECK(count == 200);

    CHECK_THROWS_AS(dynamics_series({1.0, 1.4, 0.0}, kPi, 100), ForbiddenPointError);
}

TEST_CASE("entanglement freezes then moves") {
    const OscillatorParams p{1.01, 0.0, 0.3};
    const auto rows = dynamics_series(p, kPi, 400);
    const double first = rows.front().e_n;
    double late = first;
    for (const ObservableRecord& r : rows) {
        if (r.t < kHalfPeriod) CHECK(r.e_n == doctest::Approx(first).epsilon(1e-12));
        late = std::max(late, r.e_n);
    }
    CHECK(late > first + 1e-3);
}

TEST_CASE("csv emission format") {
    const SweepConfig cfg = disc_config(3);
    const auto cells = boundness_grid(cfg);
    std::ostringstream os;
    write_boundness_csv(os, cfg, cells);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "epsilon,j0,bounded");
    int rows = 0;
    while (std::getline(is, line)) ++rows;
    CHECK(rows == 9);

    std::ostringstream os2;
    write_stability_csv(os2, cfg, stability_grid(cfg));
    std::istringstream is2(os2.str());
    std::getline(is2, line);
    CHECK(line == "epsilon,j0,lambda,S,class");

    CHECK(format_double(0.1) == "0.10000000000000001");  // 17 significant digits
}

TEST_CASE("sweeps are independent of worker partitioning") {
    const SweepConfig cfg = disc_config(24);
    setenv("MEISSNER_LAB_THREADS", "1", 1);
    const auto serial = stability_grid(cfg);
    setenv("MEISSNER_LAB_THREADS", "7", 1);
    const auto parallel = stability_grid(cfg);
    unsetenv("MEISSNER_LAB_THREADS");
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].cls == parallel[i].cls);
        CHECK(serial[i].lambda == parallel[i].lambda);
    }
}

TEST_CASE("instability region grows with coupling") {
    SweepConfig cfg;
    cfg.axis1 = {"epsilon", 0.0, 1.0, 60};
    cfg.axis2 = {"omega0_sq", 0.05, 2.0, 60};
    const auto count_unstable = [&](double j0) {
        cfg.fixed_j0 = j0;
        int n = 0;
        for (const GridCell& c : stability_grid(cfg)) n += c.cls == CellClass::unstable;
        return n;
    };
    CHECK(count_unstable(1.0) >= count_unstable(0.0));
}
