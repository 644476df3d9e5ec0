#ifndef RELTHERMO_TEST_ORACLES_HPP
#define RELTHERMO_TEST_ORACLES_HPP

// Independent reference computations used only by the tests. Nothing here
// shares code with the library paths under check.

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace oracles {

// Adaptive Simpson quadrature on [a, b].
inline double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                          double fm, double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0) return left + right;
    if (std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12) {
    double m = 0.5 * (a + b);
    double fa = f(a), fm = f(m), fb = f(b);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

// Boltzmann sum over an arbitrary level function, fixed term count, long
// double accumulation. No tail logic; callers pick n_terms large enough.
inline long double boltzmann_sum(const std::function<double(std::int64_t)>& level, double mubar,
                                 double shift_energy, std::int64_t n_terms) {
    long double beta = 1.0L / static_cast<long double>(mubar);
    long double sum = 0.0L;
    for (std::int64_t n = 0; n < n_terms; ++n)
        sum += std::exp(-beta * (static_cast<long double>(level(n)) -
                                 static_cast<long double>(shift_energy)));
    return sum;
}

// zeta(s) for s > 1 by brute summation plus the integral tail estimate
// sum_{n>N} n^-s ~ (N+1/2)^{1-s}/(s-1); accurate far beyond 1e-10 for N=2e4.
inline double zeta_brute(double s, std::int64_t n_terms = 20000) {
    long double sum = 0.0L;
    for (std::int64_t n = 1; n <= n_terms; ++n)
        sum += std::pow(static_cast<long double>(n), -static_cast<long double>(s));
    long double nh = static_cast<long double>(n_terms) + 0.5L;
    sum += std::pow(nh, 1.0L - static_cast<long double>(s)) / (static_cast<long double>(s) - 1.0L);
    return static_cast<double>(sum);
}

// Abel-summed Dirichlet eta at s = 0 or s = -1: the power series
// sum (-1)^{n-1} n^{-s} x^n evaluated near x = 1 and Richardson-extrapolated
// in (1 - x). Continues eta where the plain series diverges.
inline double eta_abel(int s) {
    if (s != 0 && s != -1) throw std::runtime_error("eta_abel: only s = 0 and s = -1");
    auto partial = [&](double x) {
        long double sum = 0.0L, xp = 1.0L;
        for (std::int64_t n = 1; n <= 4000000; ++n) {
            xp *= x;
            long double term = (n % 2 == 1 ? 1.0L : -1.0L) * xp;
            if (s == -1) term *= static_cast<long double>(n);
            sum += term;
            if (xp < 1e-22L) break;
        }
        return static_cast<double>(sum);
    };
    // A(1-e) = L + c1 e + c2 e^2 + ...; two-point Richardson removes c1.
    double e1 = 1e-3, e2 = 5e-4;
    double a1 = partial(1.0 - e1), a2 = partial(1.0 - e2);
    return a2 + (a2 - a1) * e2 / (e1 - e2);
}

// Derivative of f at x by central differences with one Richardson step.
inline double derivative(const std::function<double(double)>& f, double x, double h) {
    auto central = [&](double step) { return (f(x + step) - f(x - step)) / (2.0 * step); };
    double d1 = central(h), d2 = central(h / 2.0);
    return d2 + (d2 - d1) / 3.0;
}

// Third derivative by the 5-point central stencil with one Richardson step.
inline double third_derivative(const std::function<double(double)>& f, double x, double h) {
    auto stencil = [&](double s) {
        return (f(x + 2.0 * s) - 2.0 * f(x + s) + 2.0 * f(x - s) - f(x - 2.0 * s)) /
               (2.0 * s * s * s);
    };
    double d1 = stencil(h), d2 = stencil(h / 2.0);
    return d2 + (d2 - d1) / 3.0;
}

} // namespace oracles

#endif
