#pragma once

// Complex gamma and the two unit-circle specializations of the Lerch
// transcendent that have their own convergent algorithms:
//   z = 1   Hurwitz zeta by Euler-Maclaurin summation,
//   z = -1  alternating series by Cohen-Rodriguez Villegas-Zagier acceleration.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <string_view>

#include "complex.hpp"
#include "errors.hpp"

namespace lerchint {

enum class Method { direct_series, euler_maclaurin, alternating_accel, quadrature_fallback };

inline std::string_view to_string(Method m) {
    switch (m) {
    case Method::direct_series: return "direct-series";
    case Method::euler_maclaurin: return "euler-maclaurin";
    case Method::alternating_accel: return "alternating-accel";
    case Method::quadrature_fallback: return "quadrature-fallback";
    }
    return "unknown";
}

struct EvalResult {
    Complex value;
    double abs_err = 0.0;
    Method method = Method::direct_series;
    std::int64_t work = 1;
};

namespace detail {

// Lanczos coefficients for g = 607/128, n = 15 (Godfrey).
inline constexpr std::array<double, 14> kLanczos = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};

// log Gamma(x) for Re x >= 0.5, up to a multiple of 2 pi i.
inline Complex log_gamma_right(const Complex& x) {
    const Complex tmp = x + 5.24218750000000000;
    const Complex head = (x + 0.5) * std::log(tmp) - tmp;
    Complex ser = 0.999999999999997092;
    Complex y = x;
    for (double c : kLanczos) {
        y += 1.0;
        ser += c / y;
    }
    return head + std::log(2.5066282746310005 * ser / x);
}

// B_2, B_4, ..., B_30.
inline constexpr std::array<double, 15> kBernoulliEven = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0};

// Relative rounding growth of exp(-s log w): a few ulps plus |s log w| ulps.
inline double power_rounding(const Complex& s, const Complex& w) {
    return kEps * (4.0 + std::abs(s * std::log(w)));
}

} // namespace detail

inline Complex gamma(const Complex& x) {
    const double re = x.real();
    if (re <= 0.5) {
        const double n = std::nearbyint(re);
        if (n <= 0.0 && std::abs(x - Complex(n, 0.0)) <= 1e-12)
            throw PoleError("gamma: argument is a pole");
    }
    Complex out;
    if (re < 0.5) {
        // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
        const Complex one_minus = 1.0 - x;
        out = std::numbers::pi / (sinpi(x) * std::exp(detail::log_gamma_right(one_minus)));
    } else {
        out = std::exp(detail::log_gamma_right(x));
    }
    if (!is_finite(out)) throw EvaluationError("gamma: result overflows double precision");
    return out;
}

inline double gamma(double x) { return gamma(Complex(x, 0.0)).real(); }

// Phi(1, s, u) = sum_{n>=0} (u+n)^{-s}.
inline EvalResult hurwitz_zeta(const Complex& s, const Complex& u, double tol) {
    if (!(s.real() > 1.0)) throw DomainError("hurwitz_zeta: requires Re s > 1");
    if (!(u.real() > 0.0)) throw DomainError("hurwitz_zeta: requires Re u > 0");
    if (!(tol > 0.0)) throw DomainError("hurwitz_zeta: tolerance must be positive");

    constexpr std::int64_t kBudget = 2'000'000;
    const double target = tol / 4.0;

    for (std::int64_t n_head = std::max<std::int64_t>(8, static_cast<std::int64_t>(std::abs(s)));
         n_head <= kBudget; n_head *= 2) {
        const Complex a = u + static_cast<double>(n_head);

        // Correction terms T_k = B_2k/(2k)! (s)_{2k-1} a^{-s-2k+1}; stop at the
        // first one below target.
        std::array<Complex, 15> corr{};
        int used = -1;
        double omitted = 0.0;
        Complex poch = s;
        Complex a_pow = cpow(a, -s - 1.0);
        const Complex a_inv2 = 1.0 / (a * a);
        double fact = 2.0;
        for (int k = 1; k <= 15; ++k) {
            const Complex term = detail::kBernoulliEven[k - 1] / fact * poch * a_pow;
            const Complex next_shift = s + static_cast<double>(2 * k - 1);
            const double ratio = std::abs(next_shift) / next_shift.real();
            if (std::abs(term) * 2.0 * ratio <= target) {
                used = k - 1;
                omitted = 2.0 * ratio * std::abs(term);
                break;
            }
            corr[k - 1] = term;
            poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
            a_pow *= a_inv2;
            fact *= static_cast<double>((2 * k + 1) * (2 * k + 2));
        }
        if (used < 0) continue;

        CompensatedSum sum;
        double rounding = 0.0;
        for (std::int64_t n = 0; n < n_head; ++n) {
            const Complex w = u + static_cast<double>(n);
            const Complex t = cpow(w, -s);
            sum += t;
            rounding += detail::power_rounding(s, w) * std::abs(t);
        }
        const Complex tail_int = cpow(a, 1.0 - s) / (s - 1.0);
        const Complex half = 0.5 * cpow(a, -s);
        sum += tail_int;
        sum += half;
        double corr_mag = 0.0;
        for (int k = 0; k < used; ++k) {
            sum += corr[k];
            corr_mag += std::abs(corr[k]);
        }
        rounding += detail::power_rounding(s, a) * (std::abs(tail_int) + std::abs(half) + corr_mag);
        rounding += 2.0 * kEps * std::abs(sum.value());

        EvalResult out;
        out.value = sum.value();
        out.abs_err = omitted + rounding;
        out.method = Method::euler_maclaurin;
        out.work = n_head + used;
        if (out.abs_err > tol)
            throw ConvergenceError("hurwitz_zeta: tolerance below the rounding floor");
        return out;
    }
    throw ConvergenceError("hurwitz_zeta: work budget exhausted");
}

// Phi(-1, s, u) = sum_{n>=0} (-1)^n (u+n)^{-s}.
//
// The terms are moments a_n = int_0^1 x^n dmu of the measure
// x^{u-1} (-ln x)^{s-1} dx / Gamma(s), whose total variation is
// Gamma(Re s) / |Gamma(s)| (Re u)^{-Re s}. The accelerated sum with n terms
// is then within 2 |mu| / (3 + sqrt 8)^n of the limit.
inline EvalResult alt_lerch(const Complex& s, const Complex& u, double tol) {
    if (!(s.real() > 0.0)) throw DomainError("alt_lerch: requires Re s > 0");
    if (!(u.real() > 0.0)) throw DomainError("alt_lerch: requires Re u > 0");
    if (!(tol > 0.0)) throw DomainError("alt_lerch: tolerance must be positive");

    const double sigma = s.real();
    const double variation =
        gamma(sigma) / std::abs(gamma(s)) * std::pow(u.real(), -sigma);
    const double rate = 3.0 + std::sqrt(8.0);
    const int n = std::max(
        2, static_cast<int>(std::ceil(std::log(4.0 * variation / tol) / std::log(rate))));
    if (n > 300) throw ConvergenceError("alt_lerch: work budget exhausted");

    double d = std::pow(rate, n);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0;
    double c = -d;
    CompensatedSum sum;
    double rounding = 0.0;
    for (int k = 0; k < n; ++k) {
        const Complex w = u + static_cast<double>(k);
        const Complex a = cpow(w, -s);
        c = b - c;
        sum += c * a;
        rounding += (2.0 * kEps + detail::power_rounding(s, w)) * std::abs(c / d) * std::abs(a);
        b = (static_cast<double>(k) + n) * (static_cast<double>(k) - n) * b /
            ((k + 0.5) * (k + 1.0));
    }
    EvalResult out;
    out.value = sum.value() / d;
    out.abs_err = 2.0 * variation / std::pow(rate, n) + rounding + 2.0 * kEps * std::abs(out.value);
    out.method = Method::alternating_accel;
    out.work = n;
    if (out.abs_err > tol)
        throw ConvergenceError("alt_lerch: tolerance below the rounding floor");
    return out;
}

} // namespace lerchint
