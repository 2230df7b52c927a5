#pragma once

// Ordered-simplex integrals over 1 >= t_1 >= ... >= t_k >= x and the
// reduction of the cube integrands to one-dimensional log kernels.
//
// Under x_1 = t_1, x_j = t_j / t_{j-1} the cube (0,1)^m maps onto the
// simplex 1 >= t_1 >= ... >= t_m >= 0 with Jacobian 1/(t_1 ... t_{m-1}) and
// x_1 ... x_m = t_m. Integrating out t_1 .. t_{m-1} in closed form leaves a
// linear combination of int_0^1 t^{w-1} (-ln t)^p / (1 - z t) dt.

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"
#include "gauss_kronrod.hpp"
#include "quad1d.hpp"

namespace lerchint {

enum class Family { distinct_exponents, symmetric, f_kernel, theorem4_kernel };

inline std::string_view to_string(Family f) {
    switch (f) {
    case Family::distinct_exponents: return "distinct-exponents";
    case Family::symmetric: return "symmetric";
    case Family::f_kernel: return "f-kernel";
    case Family::theorem4_kernel: return "theorem4-kernel";
    }
    return "unknown";
}

inline Family family_from_string(std::string_view name) {
    if (name == "distinct-exponents") return Family::distinct_exponents;
    if (name == "symmetric") return Family::symmetric;
    if (name == "f-kernel") return Family::f_kernel;
    if (name == "theorem4-kernel") return Family::theorem4_kernel;
    throw DomainError("unknown integrand family '" + std::string(name) + "'");
}

// One m-dimensional cube integral. exponents holds (u_1..u_m) for
// distinct-exponents, (u) for symmetric and theorem4-kernel, (u, v) for
// f-kernel.
struct IntegrandSpec {
    int m = 1;
    Family family = Family::symmetric;
    std::vector<Complex> exponents;
    Complex z{0.0};
    Complex s{0.0};
};

inline constexpr double kDistinctThreshold = 1e-6;
inline constexpr int kMaxDimension = 20;

inline std::uint64_t factorial(int n) {
    if (n < 0 || n > kMaxDimension) throw DomainError("factorial: argument outside [0, 20]");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

// Lower bound on Re s for which the family's cube integral converges.
inline double s_threshold(Family family, int m, bool z_is_one) {
    switch (family) {
    case Family::distinct_exponents: return z_is_one ? 0.0 : -1.0;
    case Family::symmetric:
    case Family::f_kernel: return z_is_one ? 1.0 - m : -static_cast<double>(m);
    case Family::theorem4_kernel: return z_is_one ? -static_cast<double>(m) : -m - 1.0;
    }
    return 0.0;
}

inline void require_distinct(std::span<const Complex> us) {
    for (std::size_t i = 0; i < us.size(); ++i)
        for (std::size_t j = i + 1; j < us.size(); ++j)
            if (std::abs(us[i] - us[j]) < kDistinctThreshold)
                throw DegeneracyError("exponents " + std::to_string(i + 1) + " and " +
                                      std::to_string(j + 1) + " are not distinct");
}

inline void validate(const IntegrandSpec& spec) {
    if (spec.m < 1 || spec.m > kMaxDimension) throw DomainError("spec: m must lie in [1, 20]");
    std::size_t want = 1;
    switch (spec.family) {
    case Family::distinct_exponents: want = static_cast<std::size_t>(spec.m); break;
    case Family::symmetric: want = 1; break;
    case Family::f_kernel: want = 2; break;
    case Family::theorem4_kernel: want = 1; break;
    }
    if (spec.exponents.size() != want)
        throw DomainError("spec: family " + std::string(to_string(spec.family)) + " needs " +
                          std::to_string(want) + " exponent(s)");
    if ((spec.family == Family::f_kernel || spec.family == Family::theorem4_kernel) && spec.m < 2)
        throw DomainError("spec: family " + std::string(to_string(spec.family)) + " needs m > 1");
    for (const auto& u : spec.exponents) {
        if (!is_finite(u)) throw DomainError("spec: non-finite exponent");
        if (!(u.real() > 0.0)) throw DomainError("spec: exponents need positive real part");
    }
    if (!is_finite(spec.z) || !is_finite(spec.s)) throw DomainError("spec: non-finite z or s");
    if (spec.z.imag() == 0.0 && spec.z.real() > 1.0) throw DomainError("spec: z lies on (1, inf)");
    const bool z_one = spec.z == Complex(1.0);
    const double threshold = s_threshold(spec.family, spec.m, z_one);
    if (!(spec.s.real() > threshold))
        throw DomainError("spec: Re s must exceed " + std::to_string(threshold));
    if (spec.family == Family::distinct_exponents) require_distinct(spec.exponents);
    if (spec.family == Family::f_kernel) require_distinct(spec.exponents);
}

// int_{1>=t_1>=...>=t_k>=x} dt / (t_1 ... t_k) = (-ln x)^k / k!
inline double log_simplex_volume(int k, double x) {
    if (k < 1) throw DomainError("log_simplex_volume: k >= 1");
    if (!(x > 0.0 && x <= 1.0)) throw DomainError("log_simplex_volume: x must lie in (0, 1]");
    return std::pow(-std::log(x), k) / static_cast<double>(factorial(k));
}

// int (t_1^a + ... + t_k^a) / (t_1 ... t_k) dt
//   = (-ln x)^{k-1} / (k-1)! * (1 - x^a) / a
inline Complex power_sum_simplex(int k, const Complex& alpha, double x) {
    if (k < 1) throw DomainError("power_sum_simplex: k >= 1");
    if (!(x > 0.0 && x <= 1.0)) throw DomainError("power_sum_simplex: x must lie in (0, 1]");
    if (std::abs(alpha) < 1e-12)
        throw DomainError("power_sum_simplex: alpha too small; use log_simplex_volume");
    const double L = -std::log(x);
    const Complex ratio = -expm1(-alpha * L) / alpha;
    return std::pow(L, k - 1) / static_cast<double>(factorial(k - 1)) * ratio;
}

// int t_1^{u_1-u_2-1} ... t_k^{u_k-u_{k+1}-1} dt
//   = sum_i x^{u_i - u_{k+1}} / prod_{j != i} (u_j - u_i)
inline Complex distinct_exponent_simplex(std::span<const Complex> us, double x) {
    if (us.size() < 2) throw DomainError("distinct_exponent_simplex: needs k+1 >= 2 exponents");
    if (!(x > 0.0 && x <= 1.0))
        throw DomainError("distinct_exponent_simplex: x must lie in (0, 1]");
    require_distinct(us);
    const Complex last = us.back();
    const double lx = std::log(x);
    CompensatedSum sum;
    for (std::size_t i = 0; i < us.size(); ++i) {
        Complex denom = 1.0;
        for (std::size_t j = 0; j < us.size(); ++j)
            if (j != i) denom *= us[j] - us[i];
        sum += std::exp((us[i] - last) * lx) / denom;
    }
    return sum.value();
}

// |sum_{i<=k} 1/((u_i - u_{k+1}) prod_{j<=k, j!=i}(u_j - u_i)) - 1/prod_{j<=k}(u_j - u_{k+1})|
inline double lagrange_residual(std::span<const Complex> us) {
    if (us.size() < 2) throw DomainError("lagrange_residual: needs k+1 >= 2 exponents");
    require_distinct(us);
    const std::size_t k = us.size() - 1;
    const Complex last = us[k];
    CompensatedSum lhs;
    for (std::size_t i = 0; i < k; ++i) {
        Complex denom = us[i] - last;
        for (std::size_t j = 0; j < k; ++j)
            if (j != i) denom *= us[j] - us[i];
        lhs += 1.0 / denom;
    }
    Complex rhs_denom = 1.0;
    for (std::size_t j = 0; j < k; ++j) rhs_denom *= us[j] - last;
    return std::abs(lhs.value() - 1.0 / rhs_denom);
}

inline ReducedIntegrand reduce(const IntegrandSpec& spec) {
    validate(spec);
    const int m = spec.m;
    const Complex z = spec.z, s = spec.s;
    ReducedIntegrand r;
    r.prefactor = 1.0;
    switch (spec.family) {
    case Family::symmetric: {
        const double c = 1.0 / static_cast<double>(factorial(m - 1));
        r.terms.push_back({c, spec.exponents[0], s + static_cast<double>(m - 1), z});
        break;
    }
    case Family::f_kernel: {
        const Complex u = spec.exponents[0], v = spec.exponents[1];
        const Complex c = 1.0 / (static_cast<double>(factorial(m - 2)) * (u - v));
        const Complex p = s + static_cast<double>(m - 2);
        r.terms.push_back({c, v, p, z});
        r.terms.push_back({-c, u, p, z});
        break;
    }
    case Family::theorem4_kernel: {
        // (m-1) * symmetric(u) - f-kernel(u+1, u).
        const Complex u = spec.exponents[0];
        const double c = 1.0 / static_cast<double>(factorial(m - 2));
        r.terms.push_back({c, u, s + static_cast<double>(m - 1), z});
        r.terms.push_back({-c, u, s + static_cast<double>(m - 2), z});
        r.terms.push_back({c, u + 1.0, s + static_cast<double>(m - 2), z});
        break;
    }
    case Family::distinct_exponents: {
        const auto& us = spec.exponents;
        for (std::size_t i = 0; i < us.size(); ++i) {
            Complex denom = 1.0;
            for (std::size_t j = 0; j < us.size(); ++j)
                if (j != i) denom *= us[j] - us[i];
            r.terms.push_back({1.0 / denom, us[i], s, z});
        }
        break;
    }
    }
    return r;
}

using SimplexIntegrand = std::function<Complex(std::span<const double>)>;

namespace detail {

inline Complex brute_level(const SimplexIntegrand& g, std::array<double, 3>& t, int index,
                           double lower, double tol, int k) {
    auto inner = [&](double ti) -> Complex {
        t[index] = ti;
        if (index == 0) return g(std::span<const double>(t.data(), static_cast<std::size_t>(k)));
        return brute_level(g, t, index - 1, ti, tol * 1e-2, k);
    };
    if (lower >= 1.0) return 0.0;
    const AdaptiveResult r = gk_adaptive(inner, lower, 1.0, tol);
    if (r.abs_err > 10.0 * tol) throw ConvergenceError("brute_simplex: tolerance not reached");
    return r.value;
}

} // namespace detail

// Nested adaptive quadrature of int_{1>=t_1>=...>=t_k>=x} g(t_1..t_k), k <= 3.
// A test oracle for the closed forms above.
inline Complex brute_simplex(int k, const SimplexIntegrand& g, double x, double tol = 1e-9) {
    if (k < 1 || k > 3) throw DomainError("brute_simplex: k must lie in {1, 2, 3}");
    if (!(x > 0.0 && x <= 1.0)) throw DomainError("brute_simplex: x must lie in (0, 1]");
    std::array<double, 3> t{};
    return detail::brute_level(g, t, k - 1, x, tol, k);
}

} // namespace lerchint
