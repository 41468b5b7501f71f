#include "debm/params.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace debm {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// |Omega| of the nominal box [-2r, 2r]^N used for the parameter-level B0;
// the certificate recomputes with the actual grid measure.
double nominal_box_measure(const ModelParams& p) {
    const double side = 4.0 * p.r;
    return p.dim == 1 ? side : side * side;
}

double ball_measure(int dim, double rad) {
    return dim == 1 ? 2.0 * rad : M_PI * rad * rad;
}
}  // namespace

double reaction_value(const ReactionSpec& spec, double u) {
    if (spec.kind == ReactionKind::None || u <= 0.0) return 0.0;
    return spec.a * std::pow(u, spec.sigma);
}

double ModelParams::p_upper() const {
    return (theta + alpha) / (beta + 1.0) - k1 / k2 - c1;
}

ValidationResult validate_params(const ModelParams& p) {
    ValidationResult res;
    auto fail = [&res](const std::string& msg) {
        res.ok = false;
        res.violations.push_back(msg);
    };
    std::ostringstream os;

    if (p.alpha < 0.0) fail("alpha < 0");
    if (p.beta < 0.0) fail("beta < 0");
    if (p.k1 < 0.0) fail("k1 < 0");
    if (p.k2 <= 0.0) fail("k2 <= 0");
    if (p.c1 < 0.0) fail("c1 < 0");
    if (p.theta < 1.0) fail("theta < 1");
    if (p.dim != 1 && p.dim != 2) fail("dim not in {1, 2}");
    if (p.epsilon_reg < 0.0) fail("epsilon_reg < 0");
    if (p.r0 <= 0.0) fail("r0 <= 0");
    if (p.r <= 2.0 * p.r0) {
        os.str("");
        os << "r <= 2*R0 (r = " << p.r << ", 2*R0 = " << 2.0 * p.r0 << ")";
        fail(os.str());
    }
    if (p.c_cut <= 0.0) fail("c_cut <= 0");
    if (p.sobolev_cg <= 0.0) fail("sobolev_cg <= 0");
    if (p.poincare_cp <= 0.0) fail("poincare_cp <= 0");

    if (p.k2 > 0.0) {
        const double upper = p.p_upper();
        if (!(p.beta + 2.0 <= p.p && p.p < upper)) {
            os.str("");
            os << "p violates beta+2 <= p < (theta+alpha)/(beta+1) - k1/k2 - c1 "
               << "(p = " << p.p << ", window [" << p.beta + 2.0 << ", " << upper << "))";
            fail(os.str());
        }
    }

    if (p.reaction.kind == ReactionKind::PowerLaw) {
        if (p.reaction.a < 0.0) fail("reaction a < 0");
        if (p.reaction.sigma <= 0.0) fail("reaction sigma <= 0");
        if (p.reaction.u_max <= 0.0) fail("reaction u_max <= 0");
        double lo = 0.0, hi = 0.0;
        if (!reaction_s_window(p, &lo, &hi)) {
            fail("reaction s-window max(1+eps0, N eps0) <= s < min(beta+2, N(1+eps0)) is empty");
        } else if (!(lo <= p.reaction.s_exponent && p.reaction.s_exponent < hi)) {
            os.str("");
            os << "reaction s outside [" << lo << ", " << hi << ") (s = "
               << p.reaction.s_exponent << ")";
            fail(os.str());
        } else {
            // F(w) = a^(1/s) w^e with e = (sigma+theta)/(s kappa gamma); F' must
            // stay below m0_bound on [0, u_max], which needs e >= 1.
            const double s = p.reaction.s_exponent;
            const double kappa = (p.theta + p.alpha + p.beta + 1.0) / (p.beta + 2.0);
            const double Lam = (p.alpha + p.beta) /
                               (p.alpha + p.beta + p.dim * (p.beta + 2.0) * (p.theta + 1.0));
            const double eps0 = p.dim * Lam * (p.beta + 2.0);
            const double lambda = (p.theta + 1.0) * (p.beta + 2.0) / (p.theta + p.alpha + p.beta + 1.0);
            const double gamma = ((1.0 + eps0) / s - 1.0 / (p.beta + 2.0)) * lambda + 1.0;
            const double e = (p.reaction.sigma + p.theta) / (s * kappa * gamma);
            if (e < 1.0) {
                os.str("");
                os << "induced F'(w) unbounded at 0 (power " << e << " < 1)";
                fail(os.str());
            } else {
                const double wmax = std::pow(p.reaction.u_max, kappa * gamma);
                const double fp = std::pow(p.reaction.a, 1.0 / s) * e *
                                  (e == 1.0 ? 1.0 : std::pow(wmax, e - 1.0));
                if (fp > p.reaction.m0_bound) {
                    os.str("");
                    os << "sup|F'| = " << fp << " exceeds m0_bound = " << p.reaction.m0_bound;
                    fail(os.str());
                }
            }
        }
    }
    return res;
}

bool reaction_s_window(const ModelParams& p, double* lo, double* hi) {
    const double N = p.dim;
    const double Lam = (p.alpha + p.beta) / (p.alpha + p.beta + N * (p.beta + 2.0) * (p.theta + 1.0));
    const double eps0 = N * Lam * (p.beta + 2.0);
    *lo = std::max(1.0 + eps0, N * eps0);
    *hi = std::min(p.beta + 2.0, N * (1.0 + eps0));
    return *lo < *hi;
}

DerivedConstants derive_constants(const ModelParams& p, int n_max, double t_horizon) {
    DerivedConstants dc;
    dc.t_horizon = t_horizon;
    const double N = p.dim;
    const double th1 = p.theta + 1.0;
    const double b2 = p.beta + 2.0;
    const double ab = p.alpha + p.beta;

    dc.Lambda = ab / (ab + N * b2 * th1);
    dc.eps0 = N * dc.Lambda * b2;
    dc.lambda = th1 * b2 / (p.theta + p.alpha + p.beta + 1.0);
    dc.C = th1 * (p.k2 * (p.theta + p.alpha) / (1.0 + p.beta) - p.k1 - p.c1 * p.k2 * p.p);
    dc.D.resize(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        dc.D[n] = th1 * (p.k2 * p.p * std::pow(p.c_cut * std::pow(2.0, n) / p.r, b2) + p.k1 + p.c1);
    }
    dc.C_L = th1 * (p.k1 + (p.c_cut / (2.0 * p.r0)) * p.k2 * (p.theta + p.alpha)) *
             p.sobolev_cg * std::pow(2.0, b2);
    dc.b_L = std::pow(2.0, b2);
    dc.G = std::min(1.0, dc.C * std::pow(dc.lambda / th1, b2));

    if (p.reaction.kind == ReactionKind::PowerLaw) {
        double lo = 0.0, hi = 0.0;
        if (!reaction_s_window(p, &lo, &hi)) {
            throw std::invalid_argument("derive_constants: no admissible s in the reaction window");
        }
        dc.s = p.reaction.s_exponent;
        const double kappa = (p.theta + p.alpha + p.beta + 1.0) / b2;
        dc.gamma = ((1.0 + dc.eps0) / dc.s - 1.0 / b2) * dc.lambda + 1.0;
        dc.H = dc.s / ((1.0 + dc.eps0) * b2);
        dc.m = dc.s / (1.0 + dc.eps0);
        dc.f_exponent = (p.reaction.sigma + p.theta) / (dc.s * kappa * dc.gamma);
        const double wmax = std::pow(p.reaction.u_max, kappa * dc.gamma);
        dc.f_prime_sup = std::pow(p.reaction.a, 1.0 / dc.s) * dc.f_exponent *
                         (dc.f_exponent == 1.0 ? 1.0 : std::pow(wmax, dc.f_exponent - 1.0));
        dc.M_L = th1 * std::pow(p.poincare_cp * dc.gamma * dc.f_prime_sup, dc.s);
    } else {
        // neutral values so downstream formulas degenerate gracefully
        dc.s = b2;
        dc.gamma = ((1.0 + dc.eps0) / dc.s - 1.0 / b2) * dc.lambda + 1.0;
        dc.H = dc.s / ((1.0 + dc.eps0) * b2);
        dc.m = dc.s / (1.0 + dc.eps0);
        dc.M_L = 0.0;
    }

    // t^q = max(t^(1-Lambda), t^((beta+2-s)/(beta+2))), resolved pointwise at
    // the horizon; with A = 0 the s-branch is vacuous and q = 1 - Lambda.
    const double e1 = 1.0 - dc.Lambda;
    if (p.reaction.kind == ReactionKind::None) {
        dc.q = e1;
    } else {
        const double e2 = (b2 - dc.s) / b2;
        dc.q = t_horizon >= 1.0 ? std::max(e1, e2) : std::min(e1, e2);
    }

    if (dc.eps0 > 0.0) {
        const double omega0 = nominal_box_measure(p) - ball_measure(p.dim, p.r0);
        dc.theta_L = std::pow(2.0, -b2 / (dc.eps0 * dc.eps0)) *
                     std::pow(dc.G / dc.C_L, 1.0 / dc.eps0) *
                     std::pow(t_horizon, -(p.theta + 1.0) / ab);
        dc.B0 = std::pow(dc.C_L, -1.0 / dc.eps0) * std::pow(dc.G, 1.0 + 1.0 / dc.eps0) /
                (dc.D[0] * omega0);
        dc.mu = std::pow(ab + N * b2 * th1, 2.0) /
                (b2 * N * N * ab * ab * (ab + p.theta + 1.0));
    } else {
        dc.theta_L = kInf;
        dc.B0 = kInf;
        dc.mu = kInf;
    }
    return dc;
}

std::vector<std::pair<std::string, double>> constants_table(const DerivedConstants& dc) {
    std::vector<std::pair<std::string, double>> t = {
        {"lambda", dc.lambda}, {"Lambda", dc.Lambda}, {"eps0", dc.eps0},
        {"C", dc.C},           {"C_L", dc.C_L},       {"b_L", dc.b_L},
        {"M_L", dc.M_L},       {"G", dc.G},           {"q", dc.q},
        {"gamma", dc.gamma},   {"H", dc.H},           {"m", dc.m},
        {"s", dc.s},           {"theta_L", dc.theta_L}, {"B0", dc.B0},
        {"mu", dc.mu},         {"t_horizon", dc.t_horizon},
    };
    for (size_t n = 0; n < dc.D.size(); ++n) {
        t.emplace_back("D_" + std::to_string(n), dc.D[n]);
    }
    return t;
}

}  // namespace debm
