#include "screenbook/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "screenbook/errors.hpp"

namespace screenbook {

double find_root(const ScalarFn& g, double lo, double hi, const RootConfig& cfg) {
    double a = lo, b = hi;
    double fa = g(a), fb = g(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (std::isnan(fa) || std::isnan(fb))
        throw BracketError("find_root: non-finite endpoint value");
    if (fa * fb > 0.0) throw BracketError("find_root: no sign change on bracket");

    // Brent: keep [a,b] bracketing, c is the previous iterate.
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int it = 0; it < cfg.max_iter; ++it) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) +
                           0.5 * cfg.abs_tol;
        const double m = 0.5 * (c - b);
        if (std::abs(m) <= tol || fb == 0.0) return b;
        if (std::abs(e) < tol || std::abs(fa) <= std::abs(fb)) {
            d = e = m;  // bisection
        } else {
            double p, q;
            const double s = fb / fa;
            if (a == c) {  // secant
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {  // inverse quadratic
                const double qq = fa / fc, r = fb / fc;
                p = s * (2.0 * m * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q; else p = -p;
            if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
                e = d; d = p / q;
            } else {
                d = e = m;
            }
        }
        a = b; fa = fb;
        b += (std::abs(d) > tol) ? d : (m > 0 ? tol : -tol);
        fb = g(b);
        if ((fb > 0.0) == (fc > 0.0)) { c = a; fc = fa; d = e = b - a; }
    }
    return b;
}

double find_root_expanding(const ScalarFn& g, double lo, double hi, double cap_lo,
                           double cap_hi, const RootConfig& cfg) {
    double a = std::max(lo, cap_lo), b = std::min(hi, cap_hi);
    double fa = g(a), fb = g(b);
    const double grow = std::max(1.5, cfg.bracket_expansion);
    for (int k = 0; k < 200; ++k) {
        if (fa == 0.0) return a;
        if (fb == 0.0) return b;
        if (fa * fb < 0.0) break;
        if (a <= cap_lo && b >= cap_hi)
            throw BracketError("find_root_expanding: no sign change inside cap");
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a) * grow + 1e-12;
        a = std::max(cap_lo, mid - half);
        b = std::min(cap_hi, mid + half);
        fa = g(a);
        fb = g(b);
    }
    RootConfig inner = cfg;
    return find_root(g, a, b, inner);
}

namespace {

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const ScalarFn& g, double a, double b, double fa, double fm, double fb,
             double whole, double tol, int depth, bool& bottomed) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = g(lm), frm = g(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol || (b - a) < 1e-14 * (1.0 + std::abs(a)))
        return left + right + delta / 15.0;
    if (depth <= 0) {
        bottomed = true;
        return left + right;
    }
    return adapt(g, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, bottomed) +
           adapt(g, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, bottomed);
}

}  // namespace

double integrate(const ScalarFn& g, double a, double b, const QuadratureConfig& cfg) {
    if (a == b) return 0.0;
    if (a > b) return -integrate(g, b, a, cfg);

    std::vector<double> cuts{a};
    for (double t : cfg.breakpoints)
        if (t > a + 1e-15 && t < b - 1e-15) cuts.push_back(t);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());

    double total = 0.0;
    bool bottomed = false;
    const double per_tol = cfg.abs_tol / static_cast<double>(cuts.size() - 1);
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double x0 = cuts[i], x1 = cuts[i + 1];
        if (x1 - x0 < 1e-15 * (1.0 + std::abs(x0))) continue;
        const double xm = 0.5 * (x0 + x1);
        const double f0 = g(x0), fm = g(xm), f1 = g(x1);
        if (std::isnan(f0) || std::isnan(fm) || std::isnan(f1))
            throw QuadratureError("integrate: non-finite integrand", total);
        const double whole = simpson(f0, fm, f1, x1 - x0);
        total += adapt(g, x0, x1, f0, fm, f1, whole, per_tol, cfg.max_depth, bottomed);
    }
    if (bottomed) throw QuadratureError("integrate: max depth exhausted", total);
    return total;
}

double integrate_gl(const ScalarFn& g, double a, double b, int panels) {
    // 15-point Gauss-Legendre nodes/weights on [-1, 1].
    static const double xs[15] = {
        -0.9879925180204854, -0.9372733924007060, -0.8482065834104272,
        -0.7244177313601701, -0.5709721726085388, -0.3941513470775634,
        -0.2011940939974345, 0.0,                 0.2011940939974345,
        0.3941513470775634,  0.5709721726085388,  0.7244177313601701,
        0.8482065834104272,  0.9372733924007060,  0.9879925180204854};
    static const double ws[15] = {
        0.0307532419961173, 0.0703660474881081, 0.1071592204671719,
        0.1395706779261543, 0.1662692058169939, 0.1861610000155622,
        0.1984314853271116, 0.2025782419255613, 0.1984314853271116,
        0.1861610000155622, 0.1662692058169939, 0.1395706779261543,
        0.1071592204671719, 0.0703660474881081, 0.0307532419961173};
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) { std::swap(a, b); sign = -1.0; }
    panels = std::max(1, panels);
    const double h = (b - a) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double c = a + (p + 0.5) * h;
        double acc = 0.0;
        for (int i = 0; i < 15; ++i) acc += ws[i] * g(c + 0.5 * h * xs[i]);
        total += 0.5 * h * acc;
    }
    return sign * total;
}

std::pair<double, double> maximize_1d(const ScalarFn& g, double lo, double hi,
                                      const RootConfig& cfg) {
    if (!(lo < hi)) return {lo, g(lo)};

    // Coarse scan; ties resolve to the smaller argument via strict improvement.
    const int scan_n = 33;
    double best_x = lo, best_v = -std::numeric_limits<double>::infinity();
    std::vector<double> xs(scan_n), vs(scan_n);
    for (int i = 0; i < scan_n; ++i) {
        const double x = lo + (hi - lo) * i / (scan_n - 1);
        const double v = g(x);
        xs[i] = x; vs[i] = v;
        if (v > best_v) { best_v = v; best_x = x; }
    }
    int bi = 0;
    for (int i = 0; i < scan_n; ++i)
        if (xs[i] == best_x) { bi = i; break; }
    double a = xs[std::max(0, bi - 1)], b = xs[std::min(scan_n - 1, bi + 1)];

    // Golden section on [a, b].
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    const double invphi2 = invphi * invphi;
    double x1 = a + invphi2 * (b - a), x2 = a + invphi * (b - a);
    double f1 = g(x1), f2 = g(x2);
    int iters = std::max(cfg.max_iter, 80);
    for (int it = 0; it < iters && (b - a) > cfg.abs_tol; ++it) {
        if (f1 >= f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = a + invphi2 * (b - a); f1 = g(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + invphi * (b - a); f2 = g(x2);
        }
    }
    double xm = (f1 >= f2) ? x1 : x2;
    double fm = std::max(f1, f2);
    if (best_v > fm) { xm = best_x; fm = best_v; }

    // Guarded successive parabolic interpolation around (xl, xm, xr).
    double step = std::max(1e-3 * (hi - lo), 8.0 * cfg.abs_tol);
    double xl = std::max(lo, xm - step), xr = std::min(hi, xm + step);
    double fl = g(xl), fr = g(xr);
    for (int it = 0; it < 40; ++it) {
        const double d1 = (xm - xl), d2 = (xr - xm);
        const double n1 = d1 * d1 * (fm - fr), n2 = d2 * d2 * (fm - fl);
        const double de = d1 * (fm - fr) + d2 * (fm - fl);
        if (!(std::abs(de) > 0.0)) break;
        double xt = xm + 0.5 * (n1 - n2) / de;
        if (!(xt > lo && xt < hi) || std::isnan(xt)) break;
        xt = std::clamp(xt, xl, xr);
        const double ft = g(xt);
        if (ft >= fm) {
            if (xt < xm) { xr = xm; fr = fm; } else { xl = xm; fl = fm; }
            xm = xt; fm = ft;
        } else {
            if (xt < xm) { xl = xt; fl = ft; } else { xr = xt; fr = ft; }
        }
        if (xr - xl <= std::max(1e-14, 0.25 * cfg.abs_tol) * (1.0 + std::abs(xm))) break;
    }
    return {xm, fm};
}

std::vector<double> isotonic_fit(const std::vector<double>& y, const std::vector<double>& w) {
    const size_t n = y.size();
    std::vector<double> level(n), weight(n), out(n);
    std::vector<size_t> len(n);
    size_t blocks = 0;
    for (size_t i = 0; i < n; ++i) {
        level[blocks] = y[i];
        weight[blocks] = w.empty() ? 1.0 : w[i];
        len[blocks] = 1;
        ++blocks;
        while (blocks > 1 && level[blocks - 2] > level[blocks - 1]) {
            const double tw = weight[blocks - 2] + weight[blocks - 1];
            level[blocks - 2] =
                (level[blocks - 2] * weight[blocks - 2] + level[blocks - 1] * weight[blocks - 1]) / tw;
            weight[blocks - 2] = tw;
            len[blocks - 2] += len[blocks - 1];
            --blocks;
        }
    }
    size_t idx = 0;
    for (size_t b = 0; b < blocks; ++b)
        for (size_t k = 0; k < len[b]; ++k) out[idx++] = level[b];
    return out;
}

}  // namespace screenbook
