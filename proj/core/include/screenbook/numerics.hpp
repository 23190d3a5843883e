#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace screenbook {

using ScalarFn = std::function<double(double)>;

struct RootConfig {
    double abs_tol = 1e-10;
    int max_iter = 200;
    double bracket_expansion = 2.0;
};

struct QuadratureConfig {
    double abs_tol = 1e-9;
    int max_depth = 48;
    std::vector<double> breakpoints;  // sorted; intervals are split here before adapting
};

// Deterministic bracketed root finding (bisection with secant/inverse-quadratic
// acceleration). Requires g(lo)*g(hi) <= 0, else throws BracketError.
double find_root(const ScalarFn& g, double lo, double hi, const RootConfig& cfg = {});

// Expands [lo, hi] geometrically (factor cfg.bracket_expansion) around its center
// until a sign change is found, then solves. Expansion is capped at [cap_lo, cap_hi];
// throws BracketError if no sign change exists there.
double find_root_expanding(const ScalarFn& g, double lo, double hi, double cap_lo,
                           double cap_hi, const RootConfig& cfg = {});

// Adaptive Simpson quadrature to abs_tol, splitting at registered breakpoints.
// Depth exhaustion throws QuadratureError carrying the partial value.
double integrate(const ScalarFn& g, double a, double b, const QuadratureConfig& cfg = {});

// Fixed-order Gauss-Legendre panels (no adaptivity). Smooth in the integrand's
// parameters, which the profit search relies on.
double integrate_gl(const ScalarFn& g, double a, double b, int panels = 8);

// 1-D maximization: coarse scan, golden section, then guarded parabolic polish.
// Unimodal g is located to ~sqrt(eps); non-unimodal g gets the best scanned
// bracket refined locally (best effort). Ties break toward the smaller argument.
std::pair<double, double> maximize_1d(const ScalarFn& g, double lo, double hi,
                                      const RootConfig& cfg = {});

// Weighted isotonic regression (pool adjacent violators): returns the
// nondecreasing vector minimizing sum w_i (x_i - y_i)^2.
std::vector<double> isotonic_fit(const std::vector<double>& y, const std::vector<double>& w);

}  // namespace screenbook
