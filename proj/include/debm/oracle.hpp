#ifndef DEBM_ORACLE_HPP
#define DEBM_ORACLE_HPP

#include <array>

#include "debm/field.hpp"

namespace debm {

// Gaussian fundamental solution of u_t = D Laplacian(u).
double heat_kernel(const std::array<double, 2>& x, double t, double D, int dim);

// Self-similar source solution of the porous medium equation u_t = Lap(u^m):
// u = t^-a (C - kappa |x|^2 t^(-2a/N))_+^(1/(m-1)), a = N/(N(m-1)+2),
// kappa = (m-1)a/(2mN), C fixed by the total mass.
struct BarenblattSpec {
    double m = 2.0;
    int dim = 1;
    double mass = 1.0;
    double t_offset = 1.0;  // nominal initial time for profile construction

    double self_similar_a() const;
    double kappa() const;
    double C() const;                      // mass-normalization constant
    double support_radius(double t) const; // sqrt(C/kappa) t^(a/N)
};

double barenblatt(const std::array<double, 2>& x, double t, const BarenblattSpec& spec);

// mass giving C = 1 (convenient for tests and the validation run)
double barenblatt_mass_for_unit_C(double m, int dim);

// Sample an oracle onto a grid for cross-module comparisons.
template <typename F>
ScalarField sample_to_field(const ScalarField& grid_template, F&& fn) {
    ScalarField out = grid_template;
    for (int j = 0; j < out.shape[1]; ++j) {
        for (int i = 0; i < out.shape[0]; ++i) {
            out.at(i, j) = fn(std::array<double, 2>{out.x_of(i), out.y_of(j)});
        }
    }
    return out;
}

}  // namespace debm

#endif
