#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wordrep/repetition.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

inline constexpr double kFormulaTol = 1e-12;   // closed-form identities
inline constexpr double kEmpiricalTol = 1e-3;  // finite-horizon estimates
inline constexpr double kRootTol = 1e-12;      // bisection

/// One (n_j, r(n_j)/n_j, r(n_j+1)/(n_j+1)) sample, for convergence plots.
struct ConvergencePoint {
    std::int64_t n = 0;
    double rep_ratio = 0.0;
    double Rep_ratio = 0.0;
};

/// Tail-window statistics over the jump sequence. These estimate asymptotic
/// quantities; nothing here claims a limit.
struct ExponentEstimate {
    double rep_est = 0.0;   // min over windowed jumps of r(n_j)/n_j
    double Rep_est = 0.0;   // max over windowed jumps of r(n_j+1)/(n_j+1)
    double beta_est = 0.0;  // min over windowed jumps of r(n_j+1)/(n_j+1)
    std::int64_t n_lo = 0;
    std::int64_t n_hi = 0;
    std::size_t sample_count = 0;
    std::vector<ConvergencePoint> sequence;  // all jumps, not just the window
};

// Tail fractions below ~0.3 keep the Fibonacci estimates inside 1e-3 of their
// proved limits at L = 1e5; larger windows drag early jumps back in.
inline constexpr double kDefaultWindowFraction = 0.25;

inline ExponentEstimate estimate_exponents(const std::vector<JumpRecord>& js,
                                           double window_fraction = kDefaultWindowFraction) {
    if (!(window_fraction > 0.0 && window_fraction <= 1.0))
        throw std::invalid_argument("window fraction must lie in (0,1]");
    std::size_t count = js.size();
    std::size_t take = std::max<std::size_t>(3, (std::size_t)std::ceil(count * window_fraction));
    if (count < 3 || take > count)
        throw std::invalid_argument("too few jumps for exponent estimation");
    std::size_t begin = count - take;

    ExponentEstimate est;
    est.rep_est = std::numeric_limits<double>::infinity();
    est.beta_est = std::numeric_limits<double>::infinity();
    est.Rep_est = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const auto& j = js[i];
        double rep_ratio = double(j.r_n) / double(j.n);
        double Rep_ratio = double(j.r_n_plus_1) / double(j.n + 1);
        est.sequence.push_back({j.n, rep_ratio, Rep_ratio});
        if (i < begin) continue;
        est.rep_est = std::min(est.rep_est, rep_ratio);
        est.Rep_est = std::max(est.Rep_est, Rep_ratio);
        est.beta_est = std::min(est.beta_est, Rep_ratio);
        ++est.sample_count;
    }
    est.n_lo = js[begin].n;
    est.n_hi = js[count - 1].n;
    return est;
}

inline void require_rho(double rho) {
    if (!(rho > 1.0)) throw std::domain_error("bound requires rho > 1");
}

/// Rep >= (rho+1)/2 + sqrt(rho^2 (rho-1)^2 + 4 (rho-1)) / (2 rho).
inline double bound_rrep(double rho) {
    require_rho(rho);
    return (rho + 1.0) / 2.0 +
           std::sqrt(rho * rho * (rho - 1.0) * (rho - 1.0) + 4.0 * (rho - 1.0)) / (2.0 * rho);
}

/// Earlier bound: Rep >= rho + 1/(1 + rho + rho^2).
inline double bound_old_rrep(double rho) {
    require_rho(rho);
    return rho + 1.0 / (1.0 + rho + rho * rho);
}

/// beta >= rho + 1/(rho (rho+1)).
inline double bound_beta(double rho) {
    require_rho(rho);
    return rho + 1.0 / (rho * (rho + 1.0));
}

/// liminf p(n)/n >= rho (rho^3 - rho^2 - rho + 2) / (rho^3 - rho + 1).
inline double bound_liminf_p(double rho) {
    require_rho(rho);
    return rho * (rho * rho * rho - rho * rho - rho + 2.0) / (rho * rho * rho - rho + 1.0);
}

struct TheoremBounds {
    double liminf_bound = 0.0;
    double limsup_bound = 0.0;
    double liminf_alt = 0.0;  // same quantity through rho = mu/(mu-1)
};

/// Complexity bounds as a function of the irrationality exponent mu >= 2:
///   liminf p/n >= 1 + (-mu^3 + 2mu^2 + mu - 1)/(mu^4 - 2mu^3 + 3mu^2 - 3mu + 1)
///   limsup p/n >= (mu + sqrt(4(mu-1)^3 + mu^2)) / (2 mu (mu-1))
/// The alternative liminf form (mu/(mu-1)) (mu^3-3mu^2+5mu-2)/(mu^3-mu^2+2mu-1)
/// must agree numerically.
inline TheoremBounds theorem_bounds(double mu) {
    if (!(mu >= 2.0)) throw std::domain_error("theorem_bounds requires mu >= 2");
    TheoremBounds b;
    double den = ((mu - 2.0) * mu * mu + 3.0 * mu - 3.0) * mu + 1.0;
    if (!(den > 0.0)) throw std::logic_error("liminf denominator not positive");
    b.liminf_bound = 1.0 + (-mu * mu * mu + 2.0 * mu * mu + mu - 1.0) / den;
    b.limsup_bound =
        (mu + std::sqrt(4.0 * (mu - 1.0) * (mu - 1.0) * (mu - 1.0) + mu * mu)) /
        (2.0 * mu * (mu - 1.0));
    b.liminf_alt = mu / (mu - 1.0) *
                   (mu * mu * mu - 3.0 * mu * mu + 5.0 * mu - 2.0) /
                   (mu * mu * mu - mu * mu + 2.0 * mu - 1.0);
    if (std::fabs(b.liminf_bound - b.liminf_alt) > 1e-9)
        throw std::logic_error("liminf forms disagree");
    return b;
}

/// mu(sum x_k / b^k) >= rep/(rep - 1); infinite when rep = 1.
inline double mu_lower_from_rep(double rep) {
    if (!(rep >= 1.0)) throw std::domain_error("mu_lower_from_rep requires rep >= 1");
    if (rep == 1.0) return std::numeric_limits<double>::infinity();
    return rep / (rep - 1.0);
}

/// rep + 1/(1+rep): the gap expression separating Rep from rep.
inline double gap_expression(double rep) {
    if (!(rep > 0.0)) throw std::domain_error("gap_expression requires rep > 0");
    return rep + 1.0 / (1.0 + rep);
}

struct RootConstants {
    double mu1 = 0.0;   // root > 2 of X^3 - 2X^2 - X + 1
    double mu2 = 0.0;   // root > 2 of X(X-1)(X-2) - 1
    double rho1 = 0.0;  // root > 1 of X^3 - X^2 - 2X + 1
    double rho2 = 0.0;  // real root of X(X-1)^2 - 1
};

namespace detail {

template <typename F>
double bisect(F f, double lo, double hi, double tol) {
    double flo = f(lo);
    if (flo * f(hi) > 0.0) throw std::logic_error("bisection bracket does not straddle a root");
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if ((fm <= 0.0) == (flo <= 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

inline RootConstants root_constants() {
    RootConstants c;
    c.mu1 = detail::bisect([](double x) { return x * x * x - 2.0 * x * x - x + 1.0; }, 2.0, 3.0,
                           kRootTol);
    c.mu2 = detail::bisect([](double x) { return x * (x - 1.0) * (x - 2.0) - 1.0; }, 2.0, 3.0,
                           kRootTol);
    c.rho1 = detail::bisect([](double x) { return x * x * x - x * x - 2.0 * x + 1.0; }, 1.0, 2.0,
                            kRootTol);
    c.rho2 = detail::bisect([](double x) { return x * (x - 1.0) * (x - 1.0) - 1.0; }, 1.0, 2.0,
                            kRootTol);
    if (std::fabs(c.mu1 - c.rho1 / (c.rho1 - 1.0)) > 1e-9 ||
        std::fabs(c.mu2 - c.rho2 / (c.rho2 - 1.0)) > 1e-9)
        throw std::logic_error("mu_i = rho_i/(rho_i - 1) identity violated");
    return c;
}

/// One jump-derived rational approximation witness: the tail of x_1^{r} has
/// period `lambda` from position s+1 (s = r - n - lambda) and the periodic
/// continuation first diverges at digit m. The implied approximation has
/// denominator b^s (b^lambda - 1) and quality exponent about m/(s+lambda).
struct ApproximationFind {
    std::int64_t s = 0;
    std::int64_t lambda = 0;
    std::int64_t m = 0;          // divergence index; meaningful when !open
    bool open = false;           // divergence beyond horizon, no exponent claimed
    double exponent_est = 0.0;   // m / (s + lambda)
    double q_magnitude = 0.0;    // (s + lambda) * ln b, log-scale denominator size
};

struct BoundReport {
    std::string id;
    double input = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool pass = false;
    bool heuristic = false;
};

inline BoundReport make_bound_report(std::string id, double input, double lhs, double rhs,
                                     double tol, bool heuristic = false) {
    BoundReport b;
    b.id = std::move(id);
    b.input = input;
    b.lhs = lhs;
    b.rhs = rhs;
    b.margin = lhs - rhs;
    b.pass = lhs >= rhs - tol;
    b.heuristic = heuristic;
    return b;
}

/// Mines periodic-tail approximations from the jumps of x_1^L, sorted by
/// exponent estimate, best first. Finds whose divergence index lies beyond L
/// are reported open and claim no exponent.
inline std::vector<ApproximationFind> mine_approximations(Word& x,
                                                          const std::vector<JumpRecord>& js,
                                                          std::size_t L) {
    auto text = x.prefix(std::min(L, x.horizon()));
    double logb = std::log((double)x.alphabet().size);
    std::vector<ApproximationFind> out;
    for (const auto& j : js) {
        ApproximationFind f;
        f.lambda = j.lambda;
        f.s = j.r_n - j.n - j.lambda;
        f.q_magnitude = double(f.s + f.lambda) * logb;
        // scan for the first digit disagreeing with the period-lambda continuation
        std::size_t m = (std::size_t)j.r_n + 1;  // 1-based
        while (m <= text.size() && text[m - 1] == text[m - 1 - (std::size_t)f.lambda]) ++m;
        if (m > text.size()) {
            f.open = true;
        } else {
            f.m = (std::int64_t)m;
            f.exponent_est = double(f.m) / double(f.s + f.lambda);
        }
        out.push_back(f);
    }
    std::sort(out.begin(), out.end(), [](const ApproximationFind& a, const ApproximationFind& b) {
        if (a.open != b.open) return !a.open;
        return a.exponent_est > b.exponent_est;
    });
    return out;
}

}  // namespace wordrep
