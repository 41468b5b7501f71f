#ifndef DEBM_PARAMS_HPP
#define DEBM_PARAMS_HPP

#include <string>
#include <vector>

namespace debm {

// Reaction/absorption term |A(u)|. None means A(u) = 0; PowerLaw means
// |A(u)| = a * u^sigma with a >= 0, sigma > 0.
enum class ReactionKind { None, PowerLaw };

struct ReactionSpec {
    ReactionKind kind = ReactionKind::None;
    double a = 0.0;
    double sigma = 1.0;
    double s_exponent = 0.0;  // exponent s of the Poincare-Sobolev step; 0 = pick neutral
    double m0_bound = 1.0;    // bound M0 on F' over the working range
    double u_max = 1.0;       // working range [0, u_max] for the F' check
};

// |A(u)| for u >= 0. A(0) = 0 in both modes.
double reaction_value(const ReactionSpec& spec, double u);

// Model constants. alpha/beta are the degeneracy powers of the alpha-beta
// jump process (tau ~ 1/(u^alpha |grad u|^beta)); k1 bounds the drift
// components, k2 is the isotropic covariance scale sigma_ij = 2 k2 delta_ij;
// c1 is the gradient-bound constant of the drift estimate.
struct ModelParams {
    double alpha = 1.0;
    double beta = 0.0;
    double k1 = 0.0;
    double k2 = 1.0;
    double c1 = 0.0;
    double theta = 1.0;       // test exponent, free analysis knob >= 1
    double p = 2.0;           // cutoff power, must satisfy the p-window
    int dim = 1;              // N in {1, 2}
    double epsilon_reg = 0.0; // regularization of IBVP_eps
    double r0 = 1.0;          // initial support radius R0
    double r = 2.5;           // De Giorgi base radius, r > 2*R0
    double c_cut = 4.0;       // cutoff slope constant; the linear ramp needs c >= 4
    double sobolev_cg = 1.0;  // Gagliardo-Nirenberg constant c_G (configuration input)
    double poincare_cp = 1.0; // Poincare-Sobolev constant c_p (configuration input)
    ReactionSpec reaction;

    // upper end of the admissible p-window:
    // (theta+alpha)/(beta+1) - k1/k2 - c1
    double p_upper() const;
};

struct ValidationResult {
    bool ok = true;
    std::vector<std::string> violations;
};

// Checks every admissibility condition; collects all violations instead of
// stopping at the first.
ValidationResult validate_params(const ModelParams& p);

// Every derived constant of the De Giorgi scheme in closed form.
// Fields that divide by eps0 are +inf when alpha + beta = 0.
struct DerivedConstants {
    double lambda = 0.0;   // (theta+1)(beta+2)/(theta+alpha+beta+1)
    double Lambda = 0.0;   // (alpha+beta)/(alpha+beta+N(beta+2)(theta+1))
    double eps0 = 0.0;     // N * Lambda * (beta+2)
    double C = 0.0;        // gradient-term coefficient of the energy estimate
    std::vector<double> D; // D_n, n = 0..n_max
    double C_L = 0.0;
    double b_L = 0.0;      // 2^(beta+2)
    double M_L = 0.0;      // reaction constant; 0 when A = 0
    double G = 0.0;        // min(1, C (lambda/(theta+1))^(beta+2))
    double q = 0.0;        // t^q branch resolved at t_horizon
    double gamma = 0.0;    // ((1+eps0)/s - 1/(beta+2)) lambda + 1
    double H = 0.0;        // s/((1+eps0)(beta+2))
    double m = 0.0;        // s/(1+eps0)
    double s = 0.0;        // reaction exponent (beta+2 neutral when A = 0)
    double theta_L = 0.0;  // smallness threshold of the A=0 theorem at t_horizon
    double B0 = 0.0;       // C_L^(-1/eps0) G^(1+1/eps0) / (D0 |Omega0|), nominal box
    double mu = 0.0;       // exponent of the sup-norm corollary
    double t_horizon = 0.0;
    double f_exponent = 0.0;  // power-law F(w) = a^(1/s) w^f_exponent (PowerLaw only)
    double f_prime_sup = 0.0; // sup |F'| over [0, u_max] (PowerLaw only)
};

// Closed-form evaluation of all constants. t_horizon resolves the t^q branch
// (and theta_L). Throws std::invalid_argument when reaction kind = PowerLaw
// but the (R-1) window admits no s.
DerivedConstants derive_constants(const ModelParams& p, int n_max, double t_horizon);

// Admissible s-window for the reaction lemma:
// max(1+eps0, N eps0) <= s < min(beta+2, N(1+eps0)). Returns false when empty.
bool reaction_s_window(const ModelParams& p, double* lo, double* hi);

// name,value rows for the constants CSV.
std::vector<std::pair<std::string, double>> constants_table(const DerivedConstants& dc);

}  // namespace debm

#endif
