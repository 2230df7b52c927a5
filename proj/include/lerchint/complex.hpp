#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace lerchint {

using Complex = std::complex<double>;

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

inline bool is_finite(const Complex& w) {
    return std::isfinite(w.real()) && std::isfinite(w.imag());
}

// Principal-branch power w^s = exp(s log w).
inline Complex cpow(const Complex& w, const Complex& s) {
    if (s == Complex(0.0)) return 1.0;
    return std::exp(s * std::log(w));
}

// Power of a positive real base; no branch question arises.
inline Complex rpow(double base, const Complex& s) {
    if (s == Complex(0.0)) return 1.0;
    return std::exp(s * std::log(base));
}

// exp(w) - 1 without cancellation for small |w|.
inline Complex expm1(const Complex& w) {
    const double a = w.real();
    const double b = w.imag();
    const double sb2 = std::sin(0.5 * b);
    const double re = std::expm1(a) * std::cos(b) - 2.0 * sb2 * sb2;
    const double im = std::exp(a) * std::sin(b);
    return {re, im};
}

// sin(pi x) and cos(pi x) with exact argument reduction for real x.
inline double sinpi(double x) {
    const double n = std::nearbyint(x);
    const double r = x - n;
    const double v = std::sin(std::numbers::pi * r);
    return (static_cast<long long>(std::fmod(std::fabs(n), 2.0)) == 1) ? -v : v;
}

inline double cospi(double x) {
    const double n = std::nearbyint(x);
    const double r = x - n;
    const double v = std::cos(std::numbers::pi * r);
    return (static_cast<long long>(std::fmod(std::fabs(n), 2.0)) == 1) ? -v : v;
}

inline Complex sinpi(const Complex& x) {
    const double a = x.real();
    const double b = std::numbers::pi * x.imag();
    return {sinpi(a) * std::cosh(b), cospi(a) * std::sinh(b)};
}

// Neumaier-compensated accumulation, applied componentwise.
class CompensatedSum {
public:
    void add(const Complex& v) {
        step(sum_re_, comp_re_, v.real());
        step(sum_im_, comp_im_, v.imag());
    }
    CompensatedSum& operator+=(const Complex& v) {
        add(v);
        return *this;
    }
    Complex value() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

private:
    static void step(double& sum, double& comp, double x) {
        const double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    double sum_re_ = 0.0, comp_re_ = 0.0;
    double sum_im_ = 0.0, comp_im_ = 0.0;
};

// Parses "a", "bi", "a+bi", "a-bi" with decimal (optionally scientific) reals.
inline Complex parse_complex(std::string_view text) {
    const std::string s(text);
    auto fail = [&]() -> DomainError {
        return DomainError("cannot parse complex literal '" + s + "'");
    };
    if (s.empty()) throw fail();
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '+' || c == '-' ||
              c == 'e' || c == 'E' || c == 'i'))
            throw fail();
    }
    const char* begin = s.c_str();
    char* end = nullptr;
    const double first = std::strtod(begin, &end);
    if (end == begin) throw fail();
    if (*end == '\0') return {first, 0.0};
    if (*end == 'i' && end[1] == '\0') return {0.0, first};
    if (*end != '+' && *end != '-') throw fail();
    const char* second_begin = end;
    const double second = std::strtod(second_begin, &end);
    if (end == second_begin || *end != 'i' || end[1] != '\0') throw fail();
    const Complex out{first, second};
    if (!is_finite(out)) throw fail();
    return out;
}

} // namespace lerchint
