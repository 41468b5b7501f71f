#include "debm/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace debm {

double heat_kernel(const std::array<double, 2>& x, double t, double D, int dim) {
    if (t <= 0.0) throw std::invalid_argument("heat_kernel: t <= 0");
    const double r2 = dim == 1 ? x[0] * x[0] : x[0] * x[0] + x[1] * x[1];
    return std::pow(4.0 * M_PI * D * t, -0.5 * dim) * std::exp(-r2 / (4.0 * D * t));
}

double BarenblattSpec::self_similar_a() const {
    return dim / (dim * (m - 1.0) + 2.0);
}

double BarenblattSpec::kappa() const {
    return (m - 1.0) * self_similar_a() / (2.0 * m * dim);
}

double BarenblattSpec::C() const {
    const double p = 1.0 / (m - 1.0);
    const double k = kappa();
    if (dim == 1) {
        // mass = C^(p+1/2) kappa^-1/2 sqrt(pi) Gamma(p+1)/Gamma(p+3/2)
        const double shape = std::sqrt(M_PI) * std::tgamma(p + 1.0) / std::tgamma(p + 1.5);
        return std::pow(mass * std::sqrt(k) / shape, 1.0 / (p + 0.5));
    }
    // mass = pi C^(p+1) / (kappa (p+1))
    return std::pow(mass * k * (p + 1.0) / M_PI, 1.0 / (p + 1.0));
}

double BarenblattSpec::support_radius(double t) const {
    return std::sqrt(C() / kappa()) * std::pow(t, self_similar_a() / dim);
}

double barenblatt(const std::array<double, 2>& x, double t, const BarenblattSpec& spec) {
    if (t <= 0.0) throw std::invalid_argument("barenblatt: t <= 0");
    const double a = spec.self_similar_a();
    const double r2 = spec.dim == 1 ? x[0] * x[0] : x[0] * x[0] + x[1] * x[1];
    const double arg = spec.C() - spec.kappa() * r2 * std::pow(t, -2.0 * a / spec.dim);
    if (arg <= 0.0) return 0.0;
    return std::pow(t, -a) * std::pow(arg, 1.0 / (spec.m - 1.0));
}

double barenblatt_mass_for_unit_C(double m, int dim) {
    BarenblattSpec s;
    s.m = m;
    s.dim = dim;
    s.mass = 1.0;
    const double p = 1.0 / (m - 1.0);
    const double k = s.kappa();
    if (dim == 1) {
        const double shape = std::sqrt(M_PI) * std::tgamma(p + 1.0) / std::tgamma(p + 1.5);
        return shape / std::sqrt(k);
    }
    return M_PI / (k * (p + 1.0));
}

}  // namespace debm
