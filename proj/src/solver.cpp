#include "debm/solver.hpp"

#include <algorithm>
#include <cmath>

namespace debm {

namespace {

// pow with fast paths for the exponents the model actually uses
struct PowFn {
    enum class Kind { Zero, One, Two, Three, Half, OneHalf, TwoHalf, General } kind;
    double e;

    explicit PowFn(double exp) : e(exp) {
        if (exp == 0.0) kind = Kind::Zero;
        else if (exp == 1.0) kind = Kind::One;
        else if (exp == 2.0) kind = Kind::Two;
        else if (exp == 3.0) kind = Kind::Three;
        else if (exp == 0.5) kind = Kind::Half;
        else if (exp == 1.5) kind = Kind::OneHalf;
        else if (exp == 2.5) kind = Kind::TwoHalf;
        else kind = Kind::General;
    }

    double operator()(double x) const {
        switch (kind) {
            case Kind::Zero: return 1.0;
            case Kind::One: return x;
            case Kind::Two: return x * x;
            case Kind::Three: return x * x * x;
            case Kind::Half: return std::sqrt(x);
            case Kind::OneHalf: return x * std::sqrt(x);
            case Kind::TwoHalf: return x * x * std::sqrt(x);
            case Kind::General: return std::pow(x, e);
        }
        return 0.0;
    }
};

double reaction_lipschitz(const ReactionSpec& spec, double u_max, double u_floor) {
    if (spec.kind == ReactionKind::None || spec.a == 0.0) return 0.0;
    const double u_ref = spec.sigma >= 1.0 ? std::max(u_max, 1e-300)
                                           : std::max(u_floor, 1e-8);
    return spec.a * spec.sigma * std::pow(u_ref, spec.sigma - 1.0);
}

struct StepOutcome {
    bool nonfinite = false;
    double worst_undershoot = 0.0;  // most negative pre-clamp value
};

// one explicit update from prev into next (interior), boundary zeroed
StepOutcome step_into(const ScalarField& prev, ScalarField& next, const SolverConfig& cfg,
                      double dt) {
    StepOutcome out;
    const int nx = prev.shape[0], ny = prev.shape[1];
    const double h = prev.h;
    const double inv_h2 = 1.0 / (h * h);
    const double inv_2h = 1.0 / (2.0 * h);
    const ModelParams& mp = cfg.params;
    const bool two_d = prev.dim == 2;

    if (cfg.mode == SolverMode::PorousMediumValidation) {
        const PowFn pm(cfg.pme_m);
        static thread_local std::vector<double> w;
        w.resize(prev.size());
        for (size_t k = 0; k < prev.size(); ++k) w[k] = pm(prev.values[k]);
        for (int j = 0; j < ny; ++j) {
            for (int i = 0; i < nx; ++i) {
                const size_t k = prev.index(i, j);
                if (prev.is_boundary(i, j)) {
                    next.values[k] = 0.0;
                    continue;
                }
                double lapw = (w[k - 1] + w[k + 1] - 2.0 * w[k]) * inv_h2;
                if (two_d) lapw += (w[k - nx] + w[k + nx] - 2.0 * w[k]) * inv_h2;
                const double v = prev.values[k] + dt * lapw;
                if (!std::isfinite(v)) out.nonfinite = true;
                out.worst_undershoot = std::min(out.worst_undershoot, v);
                next.values[k] = std::max(v, cfg.u_floor);
            }
        }
        return out;
    }

    const PowFn pa(mp.alpha);
    const PowFn pb(mp.beta);
    const bool need_norm = mp.beta != 0.0;
    const bool have_drift = cfg.drift[0] != 0.0 || cfg.drift[1] != 0.0;
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const size_t k = prev.index(i, j);
            if (prev.is_boundary(i, j)) {
                next.values[k] = 0.0;
                continue;
            }
            const double uc = prev.values[k];
            const double uw = prev.values[k - 1], ue = prev.values[k + 1];
            double lap = (uw + ue - 2.0 * uc) * inv_h2;
            double gx = (ue - uw) * inv_2h;
            double gy = 0.0;
            if (two_d) {
                const double us = prev.values[k - nx], un = prev.values[k + nx];
                lap += (us + un - 2.0 * uc) * inv_h2;
                gy = (un - us) * inv_2h;
            }
            double gnorm = 0.0;
            if (need_norm) {
                gnorm = two_d ? std::sqrt(gx * gx + gy * gy) : std::abs(gx);
            }
            const double coef = pa(uc) * pb(gnorm) + mp.epsilon_reg;
            double adv = 0.0;
            if (have_drift) {
                if (cfg.upwind_drift) {
                    const double dxm = (uc - uw) / h, dxp = (ue - uc) / h;
                    adv = cfg.drift[0] * (cfg.drift[0] >= 0.0 ? dxm : dxp);
                    if (two_d) {
                        const double us = prev.values[k - nx], un = prev.values[k + nx];
                        const double dym = (uc - us) / h, dyp = (un - uc) / h;
                        adv += cfg.drift[1] * (cfg.drift[1] >= 0.0 ? dym : dyp);
                    }
                } else {
                    adv = cfg.drift[0] * gx + cfg.drift[1] * gy;
                }
            }
            double v = uc + dt * coef * (mp.k2 * lap + adv);
            if (mp.reaction.kind != ReactionKind::None) {
                v += dt * reaction_value(mp.reaction, uc);
            }
            if (!std::isfinite(v)) out.nonfinite = true;
            out.worst_undershoot = std::min(out.worst_undershoot, v);
            next.values[k] = std::max(v, cfg.u_floor);
        }
    }
    return out;
}

// Per-node annulus bucket for the De Giorgi gradient accumulator: largest n
// with |x| >= r_{n+1}, or -1 when the node contributes to no I_n.
struct DeGiorgiAccum {
    std::vector<int> bucket;
    std::vector<size_t> nodes;  // nodes with bucket >= 0
    int n_max;
    double z_exp;        // (theta+alpha+beta+1)/(beta+2)
    double grad_exp;     // beta+2
    std::vector<double> totals;      // running integral per n
    std::vector<double> bucket_sum;  // scratch

    DeGiorgiAccum(const ScalarField& f, const DeGiorgiGeometry& geom, const ModelParams& p)
        : n_max(geom.n_max), z_exp((p.theta + p.alpha + p.beta + 1.0) / (p.beta + 2.0)),
          grad_exp(p.beta + 2.0), totals(static_cast<size_t>(geom.n_max) + 1, 0.0),
          bucket_sum(static_cast<size_t>(geom.n_max) + 1, 0.0) {
        bucket.assign(f.size(), -1);
        for (int j = 0; j < f.shape[1]; ++j) {
            for (int i = 0; i < f.shape[0]; ++i) {
                const double rad = f.radius(i, j);
                int b = -1;
                for (int n = 0; n <= n_max; ++n) {
                    if (rad >= geom.radius(n + 1)) b = n;
                    else break;
                }
                if (b >= 0) {
                    bucket[f.index(i, j)] = b;
                    nodes.push_back(f.index(i, j));
                }
            }
        }
    }

    // left-endpoint contribution of the current state over a step of size dt
    void add(const ScalarField& f, double dt, std::vector<double>& zbuf) {
        const PowFn pz(z_exp);
        const PowFn pg(grad_exp);
        zbuf.resize(f.size());
        for (size_t k = 0; k < f.size(); ++k) zbuf[k] = pz(f.values[k]);
        std::fill(bucket_sum.begin(), bucket_sum.end(), 0.0);
        const int nx = f.shape[0], ny = f.shape[1];
        const double inv_2h = 1.0 / (2.0 * f.h);
        for (size_t k : nodes) {
            const int i = static_cast<int>(k % nx);
            const int j = static_cast<int>(k / nx);
            double dx;
            if (i == 0) dx = (-3.0 * zbuf[k] + 4.0 * zbuf[k + 1] - zbuf[k + 2]) * inv_2h;
            else if (i == nx - 1) dx = (3.0 * zbuf[k] - 4.0 * zbuf[k - 1] + zbuf[k - 2]) * inv_2h;
            else dx = (zbuf[k + 1] - zbuf[k - 1]) * inv_2h;
            double g2 = dx * dx;
            if (f.dim == 2) {
                double dy;
                if (j == 0) dy = (-3.0 * zbuf[k] + 4.0 * zbuf[k + nx] - zbuf[k + 2 * nx]) * inv_2h;
                else if (j == ny - 1) dy = (3.0 * zbuf[k] - 4.0 * zbuf[k - nx] + zbuf[k - 2 * nx]) * inv_2h;
                else dy = (zbuf[k + nx] - zbuf[k - nx]) * inv_2h;
                g2 += dy * dy;
            }
            bucket_sum[bucket[k]] += pg(std::sqrt(g2));
        }
        const double cell = f.dim == 1 ? f.h : f.h * f.h;
        double suffix = 0.0;
        for (int n = n_max; n >= 0; --n) {
            suffix += bucket_sum[n];
            totals[n] += dt * cell * suffix;
        }
    }
};

}  // namespace

double degenerate_coefficient(double u, double grad_norm, const ModelParams& p) {
    return std::pow(u, p.alpha) * std::pow(grad_norm, p.beta) + p.epsilon_reg;
}

double stable_dt(const ScalarField& f, const SolverConfig& cfg) {
    const double h = f.h;
    double max_coeff = 0.0;
    double k2 = cfg.params.k2, k1 = cfg.params.k1;
    double lip = 0.0;
    if (cfg.mode == SolverMode::PorousMediumValidation) {
        // diffusivity of Lap(u^m) is m u^(m-1)
        max_coeff = cfg.pme_m * std::pow(std::max(f.max_value(), 0.0), cfg.pme_m - 1.0);
        k2 = 1.0;
        k1 = 0.0;
    } else {
        const PowFn pa(cfg.params.alpha);
        const PowFn pb(cfg.params.beta);
        if (cfg.params.beta == 0.0) {
            max_coeff = pa(std::max(f.max_value(), 0.0)) + cfg.params.epsilon_reg;
        } else {
            const VectorField g = gradient(f);
            for (size_t k = 0; k < f.size(); ++k) {
                max_coeff = std::max(max_coeff, pa(f.values[k]) * pb(g.norm[k]));
            }
            max_coeff += cfg.params.epsilon_reg;
        }
        lip = reaction_lipschitz(cfg.params.reaction, f.max_value(), cfg.u_floor);
    }
    if (max_coeff == 0.0) return cfg.cfl_safety * h * h;
    const double denom = 2.0 * f.dim * k2 * max_coeff +
                         h * k1 * std::sqrt(static_cast<double>(f.dim)) * max_coeff +
                         h * h * lip;
    if (denom <= 0.0) return cfg.cfl_safety * h * h;
    return cfg.cfl_safety * h * h / denom;
}

ScalarField step(const ScalarField& f, const SolverConfig& cfg, double dt) {
    ScalarField next = f;
    const StepOutcome out = step_into(f, next, cfg, dt);
    if (out.nonfinite) {
        throw SolverError("instability: non-finite value at t = " + std::to_string(f.time));
    }
    next.time = f.time + dt;
    return next;
}

Trajectory solve(const ScalarField& u0, const SolverConfig& cfg) {
    Trajectory traj;
    traj.initial = u0;
    traj.initial.time = 0.0;

    std::vector<double> snaps = cfg.snapshot_times;
    std::sort(snaps.begin(), snaps.end());
    if (snaps.empty() || snaps.back() < cfg.t_end) snaps.push_back(cfg.t_end);

    ScalarField cur = u0;
    cur.time = 0.0;
    ScalarField next = cur;

    DeGiorgiAccum* accum = nullptr;
    std::vector<double> zbuf;
    DeGiorgiAccum accum_storage = cfg.track_degiorgi
        ? DeGiorgiAccum(u0, cfg.geometry, cfg.params)
        : DeGiorgiAccum(ScalarField(1, {3, 1}, 1.0, {0.0, 0.0}), DeGiorgiGeometry{}, cfg.params);
    if (cfg.track_degiorgi) {
        accum = &accum_storage;
        traj.has_degiorgi = true;
        traj.geometry = cfg.geometry;
    }

    double t = 0.0;
    size_t si = 0;
    while (si < snaps.size()) {
        const double target = snaps[si];
        while (t < target - 1e-15 * std::max(1.0, target)) {
            if (traj.step_count >= cfg.max_steps) {
                throw SolverError("step budget exceeded at t = " + std::to_string(t));
            }
            double dt = std::min(stable_dt(cur, cfg), target - t);
            const double umax = cur.max_value();
            StepOutcome out = step_into(cur, next, cfg, dt);
            int halvings = 0;
            while (!out.nonfinite && umax > 0.0 && out.worst_undershoot < -1e-8 * umax &&
                   halvings < 12) {
                // undershoot beyond clamp tolerance: retry, do not silently clamp
                dt *= 0.5;
                ++halvings;
                out = step_into(cur, next, cfg, dt);
            }
            if (out.nonfinite) {
                throw SolverError("instability: non-finite value at t = " + std::to_string(t));
            }
            if (accum) accum->add(cur, dt, zbuf);
            std::swap(cur.values, next.values);
            t += dt;
            cur.time = t;
            traj.step_count++;
            traj.dt_stats.min = std::min(traj.dt_stats.min, dt);
            traj.dt_stats.max = std::max(traj.dt_stats.max, dt);
            traj.dt_stats.sum += dt;
            traj.dt_stats.count++;
        }
        t = target;
        cur.time = t;
        traj.snapshots.emplace_back(t, cur);
        traj.mass_history.emplace_back(t, integrate(cur));
        if (accum) traj.degiorgi_grad.push_back(accum->totals);
        ++si;
    }
    return traj;
}

EpsSweepResult epsilon_sweep(const ScalarField& u0, const SolverConfig& cfg,
                             const std::vector<double>& eps_list) {
    EpsSweepResult res;
    res.eps = eps_list;
    for (double e : eps_list) {
        SolverConfig c = cfg;
        c.params.epsilon_reg = e;
        res.runs.push_back(solve(u0, c));
    }
    for (size_t i = 0; i + 1 < res.runs.size(); ++i) {
        const ScalarField& a = res.runs[i].final_field();
        const ScalarField& b = res.runs[i + 1].final_field();
        double d = 0.0;
        for (size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a.values[k] - b.values[k]));
        res.pair_sup_dist.push_back(d);
    }
    return res;
}

}  // namespace debm
