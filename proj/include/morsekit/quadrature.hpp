#pragma once

#include <cmath>
#include <cstddef>

namespace morsekit {

// Adaptive Gauss-Kronrod integration (G7/K15 panels, bisection refinement).
// The integrand may return double or std::complex<double>.

namespace detail {

// K15 abscissae (nonnegative half) and weights; the even-index nodes form
// the embedded G7 rule.
inline constexpr double kron_x[8] = {
    0.0,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329,
};
inline constexpr double kron_w[8] = {
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970,
};
inline constexpr double gauss_w[4] = {
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082,
};

template <class F, class R>
void gk15(F& f, double a, double b, R& result, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    R fc = f(c);
    R kron = kron_w[0] * fc;
    R gauss = gauss_w[0] * fc;
    for (int i = 1; i < 8; ++i) {
        R fs = f(c - h * kron_x[i]) + f(c + h * kron_x[i]);
        kron += kron_w[i] * fs;
        if (i % 2 == 0) gauss += gauss_w[i / 2] * fs;
    }
    result = kron * h;
    err = std::abs(kron - gauss) * std::abs(h);
}

template <class F, class R>
R adapt(F& f, double a, double b, double tol, int depth, R whole) {
    const double c = 0.5 * (a + b);
    R left, right;
    double el, er;
    gk15(f, a, c, left, el);
    gk15(f, c, b, right, er);
    if (depth <= 0 || el + er <= tol || std::abs((left + right) - whole) <= tol)
        return left + right;
    return adapt(f, a, c, 0.5 * tol, depth - 1, left) +
           adapt(f, c, b, 0.5 * tol, depth - 1, right);
}

}  // namespace detail

template <class F>
auto integrate(F&& f, double a, double b, double rel_tol = 1e-12, int max_depth = 48) {
    using R = decltype(f(0.5 * (a + b)));
    R whole;
    double err;
    detail::gk15(f, a, b, whole, err);
    double tol = rel_tol * (std::abs(whole) + err);
    if (tol <= 0) tol = rel_tol;
    return detail::adapt(f, a, b, tol, max_depth, whole);
}

}  // namespace morsekit
