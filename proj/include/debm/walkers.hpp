#ifndef DEBM_WALKERS_HPP
#define DEBM_WALKERS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "debm/field.hpp"
#include "debm/params.hpp"

namespace debm {

enum class JumpDistribution { GaussianIsotropic, UniformBall };

// Symmetric free-jump law. The base scale is set so that the covariance of a
// reference jump (tau = tau_ref) is 2 k2 tau_ref per axis; advance() rescales
// displacements by sqrt(tau/tau_ref) and the drift shift by tau/tau_ref.
struct JumpLaw {
    JumpDistribution distribution = JumpDistribution::GaussianIsotropic;
    double scale = 0.0;                          // per-axis std dev of a reference jump
    std::array<double, 2> drift_shift = {0.0, 0.0};  // Delta_e per reference jump

    static JumpLaw make(JumpDistribution dist, double k2, double tau_ref,
                        const std::array<double, 2>& drift = {0.0, 0.0});
};

struct Ensemble {
    int dim = 1;
    std::vector<std::array<double, 2>> positions;
    std::vector<double> weights;
    std::vector<uint8_t> alive;
    std::vector<double> clock;        // next-jump time; negative = not yet drawn
    std::vector<uint64_t> event_num;  // per-particle event counter (rng stream index)
    uint64_t rng_seed = 0;
    double sim_time = 0.0;

    size_t size() const { return positions.size(); }
    double total_alive_weight() const;
    std::array<double, 2> mean() const;          // weighted mean of alive particles
    std::array<double, 2> variance() const;      // weighted per-axis variance
};

struct WalkConfig {
    size_t count = 10000;
    JumpLaw law;
    double tau_ref = 1.0;
    double tau_max = 1000.0;
    double refresh_every = 0.1;       // density refresh cadence (sim time)
    bool deletion_mode = false;       // absorb by deleting instead of weight decay
    ScalarField grid_template;        // histogram grid; also the walk domain
};

// point ensemble of equal weights totalling total_mass
Ensemble make_point_ensemble(size_t count, const std::array<double, 2>& x0, double total_mass,
                             uint64_t seed, int dim);

// particles sampled from a density field (inverse-CDF over cells plus uniform
// in-cell jitter), deterministic in the seed
Ensemble sample_from_field(const ScalarField& density, size_t count, uint64_t seed);

struct DensityEstimate {
    ScalarField field;
    long out_of_grid = 0;  // particles clamped into the nearest boundary cell
};

// Histogram of alive weights divided by the cell volume h^dim.
DensityEstimate estimate_density(const Ensemble& ens, const ScalarField& grid_template);

// tau = min(tau_max, 1/(u^alpha |grad u|^beta + eps)) with u, |grad u| read
// from the histogram field by nearest-node lookup.
double local_tau(const std::array<double, 2>& x, const ModelParams& params,
                 const ScalarField& density, const VectorField& density_grad, double tau_max);

// Event loop to sim time `until`: refresh the density every refresh_every,
// jump every particle whose clock is due, redraw clocks at +local_tau.
// Particles leaving the grid box are absorbed. Weight decays at rate
// |A(u)|/u per unit time while the reaction is active.
void advance(Ensemble& ens, const WalkConfig& cfg, const ModelParams& params, double until);

struct PdeComparison {
    double l1_distance = 0.0;  // integral |a-b| / max(integral a, integral b)
    double support_a = 0.0;
    double support_b = 0.0;
};

// Normalized L1 distance between two fields on the same grid (0 when both
// are identically zero).
PdeComparison compare_to_pde(const ScalarField& ens_density, const ScalarField& pde_field,
                             double support_threshold = 1e-10);

// Ensemble CSV: particle id, coords, weight, alive.
std::string ensemble_to_csv(const Ensemble& ens);
void write_ensemble_csv(const Ensemble& ens, const std::string& path);

}  // namespace debm

#endif
