#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "mlab/model.hpp"
#include "mlab/observables.hpp"

namespace mlab {

// One swept parameter axis. Name is one of "epsilon", "j0", "omega0_sq",
// "omega0" (values squared before use, for charts drawn against omega0).
struct AxisSpec {
    std::string name;
    double min = 0.0;
    double max = 1.0;
    int count = 0;

    double value_at(int i) const;     // grid coordinate as written
    double physical_at(int i) const;  // coordinate mapped to the parameter
};

struct SweepConfig {
    AxisSpec axis1;
    AxisSpec axis2;
    double fixed_epsilon = 0.0;
    double fixed_j0 = 0.0;
    double fixed_omega0_sq = 1.0;
    double horizon = kPi;
    int samples = 1000;
    LogBase log_base = LogBase::natural;
};

enum class CellClass { stable, unstable, forbidden, unbounded };

std::string to_string(CellClass c);

struct GridCell {
    double coord1;
    double coord2;
    CellClass cls;
    bool bounded;
    double lambda;  // payload; meaningless for forbidden/unbounded cells
    double s;
};

struct ObservableRecord {
    double t;
    double h1, h2, nu1, nu2;
    double n1, n2, m12;
    double mu, lambda_min, e_n;
};

// Validates axes and fixed values; throws ConfigError naming the bad field.
void validate_map_config(const SweepConfig& cfg);
void validate_dynamics_config(const SweepConfig& cfg);

// Resolves a grid coordinate pair plus the fixed values into a parameter point.
OscillatorParams point_at(const SweepConfig& cfg, int i, int j);

std::vector<GridCell> boundness_grid(const SweepConfig& cfg);
std::vector<GridCell> stability_grid(const SweepConfig& cfg);

// Uniform samples over [0, horizon] with quench instants snapped onto the grid.
std::vector<double> sample_times(double horizon, int samples);

std::vector<ObservableRecord> dynamics_series(const OscillatorParams& p,
                                              double horizon, int samples,
                                              LogBase base = LogBase::natural);

ObservableRecord observable_record(const OscillatorParams& p, double t,
                                   LogBase base = LogBase::natural);

// CSV emission, 17 significant digits, fixed headers.
void write_boundness_csv(std::ostream& out, const SweepConfig& cfg,
                         const std::vector<GridCell>& cells);
void write_stability_csv(std::ostream& out, const SweepConfig& cfg,
                         const std::vector<GridCell>& cells);
void write_dynamics_csv(std::ostream& out, const std::vector<ObservableRecord>& rows);

std::string format_double(double v);

// Worker count: MEISSNER_LAB_THREADS when set, else hardware concurrency.
int worker_count();

// Deterministic chunked parallel loop over [0, n).
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace mlab
