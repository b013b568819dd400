#include "levymd/rate_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace levymd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_dim(std::size_t expected, std::size_t got, const char* what) {
    if (expected != got) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

// base^(1/nu) for a gated base; the gate has already zeroed negative bases.
[[nodiscard]] double powq(double base, double inv_nu) {
    return base <= 0.0 ? 0.0 : std::pow(base, inv_nu);
}

}  // namespace

// ==== limit cumulants ========================================================

double psi_cond1(const Condition1Config& cfg, std::span<const double> theta) {
    check_dim(cfg.dim(), theta.size(), "psi_cond1");
    double kappa_sum = 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < cfg.dim(); ++i) {
        const double k = cfg.components[i].kappa(theta[i]);
        if (std::isinf(k)) return kInf;
        kappa_sum += k;
        if (k >= 0.0) total += powq(cfg.c[i + 1] * k, 1.0 / cfg.nus[i + 1]);
    }
    if (kappa_sum >= 0.0) total += powq(cfg.c[0] * kappa_sum, 1.0 / cfg.nus[0]);
    return total;
}

double upsilon_cond2(const Condition2Config& cfg, std::span<const double> theta) {
    check_dim(cfg.dim(), theta.size(), "upsilon_cond2");
    std::vector<double> kappa(cfg.dim());
    for (std::size_t i = 0; i < cfg.dim(); ++i) {
        kappa[i] = cfg.components[i].kappa(theta[i]);
        if (std::isinf(kappa[i])) return kInf;
    }
    double total = 0.0;
    for (std::size_t j = 0; j < cfg.clock_count(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < cfg.dim(); ++i) s += cfg.weights[i][j] * kappa[i];
        if (s >= 0.0) total += powq(s, 1.0 / cfg.nu);
    }
    return total;
}

double psi_tilde(const Condition1Config& cfg, const MeanVector& m,
                 std::span<const double> theta) {
    check_dim(cfg.dim(), theta.size(), "psi_tilde");
    check_dim(cfg.dim(), m.values.size(), "psi_tilde mean vector");
    const double nu0 = cfg.nus[0];
    double total = 0.0;
    double shared = 0.0;
    if (m.is_zero) {
        for (std::size_t i = 0; i < cfg.dim(); ++i) {
            const double nui = cfg.nus[i + 1];
            const double half_curv = 0.5 * cfg.components[i].curvature();
            const double q = half_curv * theta[i] * theta[i];
            if (nu0 <= nui) total += powq(cfg.c[i + 1] * q, 1.0 / nui);
            if (nui <= nu0) shared += q;
        }
    } else {
        for (std::size_t i = 0; i < cfg.dim(); ++i) {
            const double nui = cfg.nus[i + 1];
            const double mt = m.values[i] * theta[i];
            if (mt < 0.0) continue;  // sign gate [theta_i m_i >= 0]
            if (nu0 <= nui) total += powq(cfg.c[i + 1] * mt, 1.0 / nui);
            if (nui <= nu0) shared += mt;
        }
    }
    total += powq(cfg.c[0] * shared, 1.0 / nu0);
    return total;
}

double upsilon_tilde(const Condition2Config& cfg, const MeanVector& m,
                     std::span<const double> theta) {
    check_dim(cfg.dim(), theta.size(), "upsilon_tilde");
    check_dim(cfg.dim(), m.values.size(), "upsilon_tilde mean vector");
    double total = 0.0;
    for (std::size_t j = 0; j < cfg.clock_count(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < cfg.dim(); ++i) {
            if (m.is_zero) {
                s += 0.5 * cfg.weights[i][j] * cfg.components[i].curvature() * theta[i] * theta[i];
            } else {
                const double mt = m.values[i] * theta[i];
                if (mt >= 0.0) s += cfg.weights[i][j] * mt;
            }
        }
        total += powq(s, 1.0 / cfg.nu);
    }
    return total;
}

LimitCumulant make_psi(Condition1Config cfg) {
    cfg.validate();
    LimitCumulant f;
    f.kind = LimitCumulant::Kind::Psi;
    f.dim = cfg.dim();
    for (const auto& c : cfg.components) f.domains.push_back(c.domain());
    f.eval = [cfg = std::move(cfg)](std::span<const double> theta) {
        return psi_cond1(cfg, theta);
    };
    return f;
}

LimitCumulant make_upsilon(Condition2Config cfg) {
    cfg.validate();
    LimitCumulant f;
    f.kind = LimitCumulant::Kind::Upsilon;
    f.dim = cfg.dim();
    for (const auto& c : cfg.components) f.domains.push_back(c.domain());
    f.eval = [cfg = std::move(cfg)](std::span<const double> theta) {
        return upsilon_cond2(cfg, theta);
    };
    return f;
}

LimitCumulant make_psi_tilde(Condition1Config cfg, MeanVector m) {
    cfg.validate();
    check_dim(cfg.dim(), m.values.size(), "make_psi_tilde");
    LimitCumulant f;
    f.kind = LimitCumulant::Kind::PsiTilde;
    f.dim = cfg.dim();
    f.domains.assign(f.dim, ThetaDomain{-kInf, kInf});  // tilde kernels are finite everywhere
    f.eval = [cfg = std::move(cfg), m = std::move(m)](std::span<const double> theta) {
        return psi_tilde(cfg, m, theta);
    };
    return f;
}

LimitCumulant make_upsilon_tilde(Condition2Config cfg, MeanVector m) {
    cfg.validate();
    check_dim(cfg.dim(), m.values.size(), "make_upsilon_tilde");
    LimitCumulant f;
    f.kind = LimitCumulant::Kind::UpsilonTilde;
    f.dim = cfg.dim();
    f.domains.assign(f.dim, ThetaDomain{-kInf, kInf});
    f.eval = [cfg = std::move(cfg), m = std::move(m)](std::span<const double> theta) {
        return upsilon_tilde(cfg, m, theta);
    };
    return f;
}

// ==== numeric conjugate ======================================================

ConjugateOptions ConjugateOptions::boxed(const LimitCumulant& f, double halfwidth) {
    ConjugateOptions opts;
    for (const auto& dom : f.domains) {
        const double lo = std::isinf(dom.lo)
                              ? -halfwidth
                              : std::max(-halfwidth, dom.lo + 0.01 * std::abs(dom.lo));
        const double hi = std::isinf(dom.hi)
                              ? halfwidth
                              : std::min(halfwidth, dom.hi - 0.01 * std::abs(dom.hi));
        if (!(lo < hi)) throw std::invalid_argument("ConjugateOptions: empty search box");
        opts.lo.push_back(lo);
        opts.hi.push_back(hi);
    }
    return opts;
}

namespace {

using Objective = std::function<double(std::span<const double>)>;

// <theta, x> - f(theta); -inf wherever f is +inf.
double gain(const Objective& f, std::span<const double> x, std::span<const double> theta) {
    const double fv = f(theta);
    if (std::isinf(fv) && fv > 0.0) return -kInf;
    double dot = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) dot += theta[i] * x[i];
    return dot - fv;
}

// Divergence scan along geometric multiples of a direction.  The objective is
// concave along any ray, so once it has peaked and gone nonpositive it never
// recovers.
bool diverges_along(const Objective& f, std::span<const double> x, std::span<const double> dir,
                    double threshold) {
    std::vector<double> theta(dir.size());
    double prev = -kInf;
    for (int j = 0; j <= 42; ++j) {
        const double r = std::ldexp(1.0, j);
        for (std::size_t i = 0; i < dir.size(); ++i) theta[i] = r * dir[i];
        const double gv = gain(f, x, theta);
        if (gv > threshold) return true;
        if (gv < prev && gv <= 0.0) return false;
        prev = gv;
    }
    return false;
}

// Golden-section maximization of a concave section over [a, b]; returns the
// best of the interior search and both endpoints.
std::pair<double, double> golden_max(const std::function<double(double)>& phi, double a, double b,
                                     double tol) {
    constexpr double kInvPhi = 0.61803398874989484820;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = phi(x1);
    double f2 = phi(x2);
    const double fa = phi(a);
    const double fb = phi(b);
    for (int it = 0; it < 200 && (b - a) > tol * (1.0 + std::abs(a) + std::abs(b)); ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = phi(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = phi(x1);
        }
    }
    double best_x = f1 >= f2 ? x1 : x2;
    double best_f = std::max(f1, f2);
    if (fa > best_f) {
        best_f = fa;
        best_x = a;
    }
    if (fb > best_f) {
        best_f = fb;
        best_x = b;
    }
    return {best_x, best_f};
}

}  // namespace

ConjugateResult conjugate_fn(const Objective& f, std::span<const double> x,
                             const ConjugateOptions& opts) {
    const std::size_t h = x.size();
    check_dim(h, opts.lo.size(), "conjugate_fn box lo");
    check_dim(h, opts.hi.size(), "conjugate_fn box hi");
    for (const double xi : x) {
        if (!std::isfinite(xi)) throw std::domain_error("conjugate_fn: x must be finite");
    }

    ConjugateResult result;
    result.x.assign(x.begin(), x.end());

    // Ray probes: coordinate directions plus the orthant of x.
    {
        std::vector<double> dir(h, 0.0);
        for (std::size_t i = 0; i < h; ++i) {
            dir[i] = 1.0;
            const bool up = diverges_along(f, x, dir, opts.divergence_threshold);
            dir[i] = -1.0;
            const bool dn = !up && diverges_along(f, x, dir, opts.divergence_threshold);
            dir[i] = 0.0;
            if (up || dn) {
                result.value = kInf;
                result.method = ConjugateResult::Method::Grid;
                return result;
            }
        }
        bool nonzero = false;
        for (std::size_t i = 0; i < h; ++i) {
            dir[i] = x[i] > 0.0 ? 1.0 : (x[i] < 0.0 ? -1.0 : 0.0);
            nonzero |= dir[i] != 0.0;
        }
        if (nonzero && h > 1 && diverges_along(f, x, dir, opts.divergence_threshold)) {
            result.value = kInf;
            result.method = ConjugateResult::Method::Grid;
            return result;
        }
    }

    // Coarse grid scan, capped to keep the total evaluation count bounded.
    int per_axis = std::max(5, opts.grid_points);
    while (h > 1 && std::pow(static_cast<double>(per_axis), static_cast<double>(h)) > 6.0e4 &&
           per_axis > 5) {
        per_axis -= 4;
    }
    std::vector<double> theta(h, 0.0);
    double best = gain(f, x, theta);  // theta = 0 gives the exact zero of the conjugate at x = 0
    std::vector<double> best_theta = theta;
    std::vector<int> idx(h, 0);
    for (;;) {
        for (std::size_t i = 0; i < h; ++i) {
            theta[i] = opts.lo[i] + (opts.hi[i] - opts.lo[i]) * idx[i] / (per_axis - 1);
        }
        const double gv = gain(f, x, theta);
        if (gv > best) {
            best = gv;
            best_theta = theta;
        }
        std::size_t carry = 0;
        while (carry < h && ++idx[carry] == per_axis) idx[carry++] = 0;
        if (carry == h) break;
    }

    // Cyclic coordinate ascent; each axis section is concave.
    const double grid_best = best;
    theta = best_theta;
    for (int pass = 0; pass < opts.refine_passes; ++pass) {
        const double before = best;
        for (std::size_t axis = 0; axis < h; ++axis) {
            auto phi = [&](double u) {
                theta[axis] = u;
                return gain(f, x, theta);
            };
            const auto [u, fu] = golden_max(phi, opts.lo[axis], opts.hi[axis], opts.theta_tol);
            theta[axis] = u;
            if (fu > best) {
                best = fu;
                best_theta = theta;
            } else {
                theta[axis] = best_theta[axis];
            }
        }
        if (best - before <= 1e-13 * (1.0 + std::abs(best))) break;
    }

    if (best > opts.divergence_threshold) {
        result.value = kInf;
        result.method = ConjugateResult::Method::Grid;
        return result;
    }
    result.value = best;
    result.argmax = best_theta;
    result.method = best > grid_best ? ConjugateResult::Method::Ascent
                                     : ConjugateResult::Method::Grid;
    return result;
}

ConjugateResult conjugate(const LimitCumulant& f, std::span<const double> x,
                          const ConjugateOptions& opts) {
    check_dim(f.dim, x.size(), "conjugate");
    return conjugate_fn(f.eval, x, opts);
}

// ==== closed forms ===========================================================

double closed_form_u(StableIndex nu, double curvature, double x) {
    if (!(curvature >= 0.0)) throw std::domain_error("closed_form_u: curvature must be >= 0");
    if (curvature == 0.0) return x == 0.0 ? 0.0 : kInf;
    const double n = nu.value;
    const double k = std::pow(0.5 * n, n / (2.0 - n)) - std::pow(0.5 * n, 2.0 / (2.0 - n));
    return k * std::pow(2.0 * x * x / curvature, 1.0 / (2.0 - n));
}

double closed_form_v(StableIndex nu, double mean, double x) {
    if (mean == 0.0) return x == 0.0 ? 0.0 : kInf;
    const double ratio = x / mean;
    if (ratio < 0.0) return kInf;
    const double n = nu.value;
    const double k = std::pow(n, n / (1.0 - n)) - std::pow(n, 1.0 / (1.0 - n));
    return k * std::pow(ratio, 1.0 / (1.0 - n));
}

double md_optimizer_quadratic(StableIndex nu, double c, double curvature, double x) {
    if (!(c > 0.0) || !(curvature > 0.0) || !(x >= 0.0)) {
        throw std::domain_error("md_optimizer_quadratic: needs c > 0, curvature > 0, x >= 0");
    }
    const double n = nu.value;
    return std::pow(2.0 / (c * curvature), 1.0 / (2.0 - n)) *
           std::pow(0.5 * n * x, n / (2.0 - n));
}

double md_optimizer_linear(StableIndex nu, double c, double mean, double x) {
    if (!(c > 0.0) || !(mean > 0.0) || !(x >= 0.0)) {
        throw std::domain_error("md_optimizer_linear: needs c > 0, mean > 0, x >= 0");
    }
    const double n = nu.value;
    return std::pow(n * x, n / (1.0 - n)) / std::pow(c * mean, 1.0 / (1.0 - n));
}

// ==== explicit moderate-deviation rates ======================================

double md_rate_separable(const Condition1Config& cfg, const MeanVector& m,
                         std::span<const double> x) {
    check_dim(cfg.dim(), x.size(), "md_rate_separable");
    check_dim(cfg.dim(), m.values.size(), "md_rate_separable mean vector");
    for (std::size_t i = 1; i < cfg.nus.size(); ++i) {
        if (!(cfg.nus[0] < cfg.nus[i])) {
            throw std::invalid_argument(
                "md_rate_separable: requires nu_0 strictly below every component index");
        }
    }
    double total = 0.0;
    for (std::size_t i = 0; i < cfg.dim(); ++i) {
        const StableIndex nui{cfg.nus[i + 1]};
        total += m.is_zero
                     ? closed_form_u(nui, cfg.c[i + 1] * cfg.components[i].curvature(), x[i])
                     : closed_form_v(nui, cfg.c[i + 1] * m.values[i], x[i]);
    }
    return total;
}

bool in_admissible_cone(const MeanVector& m, std::span<const double> x) {
    check_dim(m.values.size(), x.size(), "in_admissible_cone");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] * m.values[i] < 0.0) return false;
        if (m.values[i] == 0.0 && x[i] != 0.0) return false;
    }
    return true;
}

double md_rate_single_clock(const Condition1Config& cfg, const MeanVector& m,
                            std::span<const double> x) {
    check_dim(cfg.dim(), x.size(), "md_rate_single_clock");
    check_dim(cfg.dim(), m.values.size(), "md_rate_single_clock mean vector");
    if (m.is_zero) {
        throw std::invalid_argument("md_rate_single_clock: requires a nonzero mean vector");
    }
    for (std::size_t i = 1; i < cfg.nus.size(); ++i) {
        if (!(cfg.nus[0] > cfg.nus[i])) {
            throw std::invalid_argument(
                "md_rate_single_clock: requires nu_0 strictly above every component index");
        }
    }
    if (!in_admissible_cone(m, x)) return kInf;
    const StableIndex nu0{cfg.nus[0]};
    double rate = 0.0;
    for (std::size_t i = 0; i < cfg.dim(); ++i) {
        rate = std::max(rate, closed_form_v(nu0, cfg.c[0] * m.values[i], x[i]));
    }
    return rate;
}

}  // namespace levymd
