#ifndef DEBM_SOLVER_HPP
#define DEBM_SOLVER_HPP

#include <array>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "debm/field.hpp"
#include "debm/params.hpp"

namespace debm {

// EinsteinDegenerate steps the non-divergent regularized equation
//   u_t = (u^alpha |grad u|^beta + eps)(k2 Lap u + b . grad u) + |A(u)|.
// PorousMediumValidation steps u_t = Lap(u^m) and exists only to check the
// numerics against the closed-form source solution.
enum class SolverMode { EinsteinDegenerate, PorousMediumValidation };

struct SolverConfig {
    SolverMode mode = SolverMode::EinsteinDegenerate;
    ModelParams params;
    std::array<double, 2> drift = {0.0, 0.0};  // constant per axis, |b_i| <= k1
    double cfl_safety = 0.25;
    double t_end = 1.0;
    std::vector<double> snapshot_times;  // sorted, within (0, t_end]
    double u_floor = 0.0;
    double pme_m = 2.0;  // only in validation mode
    long max_steps = 200000000;
    bool upwind_drift = false;
    // when set, per-step accumulation of the De Giorgi gradient integrals
    bool track_degiorgi = false;
    DeGiorgiGeometry geometry;
};

struct DtStats {
    double min = std::numeric_limits<double>::infinity();
    double max = 0.0;
    double sum = 0.0;
    long count = 0;
    double mean() const { return count > 0 ? sum / count : 0.0; }
};

struct Trajectory {
    ScalarField initial;
    std::vector<std::pair<double, ScalarField>> snapshots;
    long step_count = 0;
    DtStats dt_stats;
    std::vector<std::pair<double, double>> mass_history;  // (time, total integral)

    // cumulative int_0^t int_{Omega_{n+1}} |grad z|^(beta+2), per snapshot,
    // left-endpoint rule over the solver's own steps; filled when
    // track_degiorgi is set
    bool has_degiorgi = false;
    DeGiorgiGeometry geometry;
    std::vector<std::vector<double>> degiorgi_grad;

    const ScalarField& final_field() const { return snapshots.back().second; }
};

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 1/tau plus regularization: u^alpha |grad u|^beta + eps.
double degenerate_coefficient(double u, double grad_norm, const ModelParams& p);

// Largest stable explicit step for the current field.
double stable_dt(const ScalarField& f, const SolverConfig& cfg);

// One explicit Euler update (Dirichlet zero on the boundary, clamp at
// u_floor). Throws SolverError when the update produces non-finite values.
ScalarField step(const ScalarField& f, const SolverConfig& cfg, double dt);

// Adaptive-dt run recording snapshots at the requested times (t_end is always
// recorded). Guarantees u >= u_floor and u = 0 on the boundary throughout.
Trajectory solve(const ScalarField& u0, const SolverConfig& cfg);

struct EpsSweepResult {
    std::vector<double> eps;
    std::vector<Trajectory> runs;
    // sup-norm distance between final snapshots of consecutive eps runs
    std::vector<double> pair_sup_dist;
};

// solve() per epsilon (positive decreasing list), exhibiting the viscosity
// convergence of u_eps.
EpsSweepResult epsilon_sweep(const ScalarField& u0, const SolverConfig& cfg,
                             const std::vector<double>& eps_list);

}  // namespace debm

#endif
