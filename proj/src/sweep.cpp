#include "mlab/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <ostream>
#include <thread>

#include "mlab/hill.hpp"

namespace mlab {

double AxisSpec::value_at(int i) const {
    return min + (max - min) * static_cast<double>(i) / static_cast<double>(count - 1);
}

double AxisSpec::physical_at(int i) const {
    const double v = value_at(i);
    return name == "omega0" ? v * v : v;
}

std::string to_string(CellClass c) {
    switch (c) {
        case CellClass::stable: return "stable";
        case CellClass::unstable: return "unstable";
        case CellClass::forbidden: return "forbidden";
        case CellClass::unbounded: return "unbounded";
    }
    return "?";
}

namespace {

bool known_axis(const std::string& name) {
    return name == "epsilon" || name == "j0" || name == "omega0_sq" || name == "omega0";
}

bool targets_omega(const std::string& name) {
    return name == "omega0_sq" || name == "omega0";
}

void validate_axis(const AxisSpec& a, const char* label) {
    if (!known_axis(a.name))
        throw ConfigError(std::string(label) + ".name: unknown axis '" + a.name + "'");
    if (a.count < 2)
        throw ConfigError(std::string(label) + ".count: must be >= 2");
    if (!(a.min < a.max))
        throw ConfigError(std::string(label) + ".min: must be < max");
}

}  // namespace

void validate_map_config(const SweepConfig& cfg) {
    validate_axis(cfg.axis1, "axis1");
    validate_axis(cfg.axis2, "axis2");
    if (cfg.axis1.name == cfg.axis2.name ||
        (targets_omega(cfg.axis1.name) && targets_omega(cfg.axis2.name)))
        throw ConfigError("axis2.name: both axes target the same parameter");
    if (!targets_omega(cfg.axis1.name) && !targets_omega(cfg.axis2.name) &&
        cfg.fixed_omega0_sq <= 0.0)
        throw ConfigError("omega0_sq: must be > 0");
}

void validate_dynamics_config(const SweepConfig& cfg) {
    if (cfg.horizon <= 0.0) throw ConfigError("horizon: must be > 0");
    if (cfg.samples < 2) throw ConfigError("samples: must be >= 2");
}

OscillatorParams point_at(const SweepConfig& cfg, int i, int j) {
    OscillatorParams p{cfg.fixed_omega0_sq, cfg.fixed_epsilon, cfg.fixed_j0};
    const auto apply = [&p](const AxisSpec& a, int idx) {
        const double v = a.physical_at(idx);
        if (a.name == "epsilon") p.epsilon = v;
        else if (a.name == "j0") p.j0 = v;
        else p.omega0_sq = v;
    };
    apply(cfg.axis1, i);
    apply(cfg.axis2, j);
    return p;
}

std::vector<GridCell> boundness_grid(const SweepConfig& cfg) {
    validate_map_config(cfg);
    const int n1 = cfg.axis1.count, n2 = cfg.axis2.count;
    std::vector<GridCell> cells(static_cast<size_t>(n1) * n2);
    parallel_for(n1 * n2, [&](int idx) {
        const int i = idx / n2, j = idx % n2;
        const OscillatorParams p = point_at(cfg, i, j);
        const bool ok = p.omega0_sq > 0.0 && is_bounded(p);
        cells[idx] = {cfg.axis1.value_at(i), cfg.axis2.value_at(j),
                      ok ? CellClass::stable : CellClass::unbounded, ok, 0.0, 0.0};
    });
    return cells;
}

std::vector<GridCell> stability_grid(const SweepConfig& cfg) {
    validate_map_config(cfg);
    const int n1 = cfg.axis1.count, n2 = cfg.axis2.count;
    std::vector<GridCell> cells(static_cast<size_t>(n1) * n2);
    parallel_for(n1 * n2, [&](int idx) {
        const int i = idx / n2, j = idx % n2;
        const OscillatorParams p = point_at(cfg, i, j);
        GridCell cell{cfg.axis1.value_at(i), cfg.axis2.value_at(j),
                      CellClass::unbounded, false, 0.0, 0.0};
        if (p.omega0_sq <= 0.0) {
            cell.cls = CellClass::forbidden;
        } else if (is_bounded(p)) {
            cell.bounded = true;
            try {
                const StabilityResult st = stability(p);
                cell.lambda = st.lambda;
                cell.s = st.s;
                cell.cls = st.stable() ? CellClass::stable : CellClass::unstable;
            } catch (const ForbiddenPointError&) {
                cell.cls = CellClass::forbidden;
                cell.bounded = false;
            }
        }
        cells[idx] = cell;
    });
    return cells;
}

std::vector<double> sample_times(double horizon, int samples) {
    if (horizon <= 0.0) throw ConfigError("horizon: must be > 0");
    if (samples < 2) throw ConfigError("samples: must be >= 2");
    const double dt = horizon / (samples - 1);
    std::vector<double> ts(samples);
    for (int i = 0; i < samples; ++i) {
        double t = dt * i;
        // Snap samples adjacent to a quench instant onto it.
        const double k = std::round(t / kHalfPeriod);
        const double quench_t = k * kHalfPeriod;
        if (k >= 0.0 && std::abs(t - quench_t) < 0.5 * dt && quench_t <= horizon)
            t = quench_t;
        ts[i] = t;
    }
    return ts;
}

ObservableRecord observable_record(const OscillatorParams& p, double t, LogBase base) {
    const DilatationState h1 = h_pinney(p, 1, t);
    const DilatationState h2 = h_pinney(p, 2, t);
    const DilatationState nu1 = nu(p, 1, t);
    const DilatationState nu2 = nu(p, 2, t);
    const ExcitationRecord ex = photon_numbers(p, t);
    const EntanglementRecord en = entanglement(vacuum_coefficients(p, t), base);
    return {t, h1.h, h2.h, nu1.h, nu2.h, ex.n1, ex.n2, ex.m12,
            en.mu, en.lambda_min, en.e_n};
}

std::vector<ObservableRecord> dynamics_series(const OscillatorParams& p,
                                              double horizon, int samples,
                                              LogBase base) {
    require_admissible(p);
    const std::vector<double> ts = sample_times(horizon, samples);
    std::vector<ObservableRecord> rows(ts.size());
    parallel_for(static_cast<int>(ts.size()), [&](int i) {
        rows[i] = observable_record(p, ts[i], base);
    });
    return rows;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_boundness_csv(std::ostream& out, const SweepConfig& cfg,
                         const std::vector<GridCell>& cells) {
    out << cfg.axis1.name << ',' << cfg.axis2.name << ",bounded\n";
    for (const GridCell& c : cells)
        out << format_double(c.coord1) << ',' << format_double(c.coord2) << ','
            << (c.bounded ? 1 : 0) << '\n';
}

void write_stability_csv(std::ostream& out, const SweepConfig& cfg,
                         const std::vector<GridCell>& cells) {
    out << cfg.axis1.name << ',' << cfg.axis2.name << ",lambda,S,class\n";
    for (const GridCell& c : cells) {
        out << format_double(c.coord1) << ',' << format_double(c.coord2) << ',';
        if (c.cls == CellClass::stable || c.cls == CellClass::unstable)
            out << format_double(c.lambda) << ',' << format_double(c.s);
        else
            out << ',';
        out << ',' << to_string(c.cls) << '\n';
    }
}

void write_dynamics_csv(std::ostream& out, const std::vector<ObservableRecord>& rows) {
    out << "t,h1,h2,nu1,nu2,N1,N2,M12,mu,lambda_min,E_N\n";
    for (const ObservableRecord& r : rows) {
        const double vals[] = {r.t, r.h1, r.h2, r.nu1, r.nu2, r.n1, r.n2,
                               r.m12, r.mu, r.lambda_min, r.e_n};
        for (int i = 0; i < 11; ++i) out << (i ? "," : "") << format_double(vals[i]);
        out << '\n';
    }
}

int worker_count() {
    if (const char* env = std::getenv("MEISSNER_LAB_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

void parallel_for(int n, const std::function<void(int)>& body) {
    const int workers = std::min(worker_count(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (int i = w; i < n; i += workers) body(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (std::thread& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace mlab
