#pragma once

// Lerch transcendent Phi(z, s, u) = sum_{n>=0} z^n / (u+n)^s and its two
// recurrences in u.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

#include "complex.hpp"
#include "errors.hpp"
#include "quad1d.hpp"
#include "special.hpp"

namespace lerchint {

struct LerchArgs {
    Complex z;
    Complex s;
    Complex u;
};

struct PhiOptions {
    // Permit Phi(z,s,u) = Gamma(s)^{-1} int_0^1 t^{u-1}(-ln t)^{s-1}/(1-zt) dt
    // where no series method applies. Results carry Method::quadrature_fallback.
    bool allow_quadrature = false;
    std::int64_t series_budget = 100'000;
    std::int64_t extended_budget = 2'000'000;
};

namespace detail {

inline bool on_branch_cut_beyond_one(const Complex& z) { return z.imag() == 0.0 && z.real() > 1.0; }

// Bound on |(u+n)^{-s}| for all n >= n0 when Re s >= 0, and a ratio bound for
// consecutive magnitudes when Re s < 0.
inline double term_envelope(const Complex& s, const Complex& u, double n0) {
    const Complex w = u + n0;
    const double phase = std::exp(std::fabs(s.imag()) * std::fabs(std::arg(w)));
    if (s.real() >= 0.0) return std::pow(u.real() + n0, -s.real()) * phase;
    return std::pow(std::abs(u) + n0, -s.real()) * phase;
}

inline EvalResult direct_series(const LerchArgs& a, double tol, std::int64_t budget) {
    const Complex z = a.z, s = a.s, u = a.u;
    const double rz = std::abs(z);
    EvalResult out;
    out.method = Method::direct_series;

    if (z == Complex(0.0)) {
        out.value = cpow(u, -s);
        out.abs_err = power_rounding(s, u) * std::abs(out.value);
        out.work = 1;
        if (out.abs_err > tol) throw ConvergenceError("phi: tolerance below the rounding floor");
        return out;
    }

    const double log_z = std::log(z).imag();
    CompensatedSum sum;
    double rounding = 0.0;
    double abs_sum = 0.0;
    for (std::int64_t n = 0; n < budget; ++n) {
        const double dn = static_cast<double>(n);
        const Complex w = u + dn;
        // z^n in polar form: |z|^n cis(n arg z).
        const double mag = std::pow(rz, dn);
        const Complex zn = std::polar(mag, dn * log_z);
        const Complex t = zn * cpow(w, -s);
        sum += t;
        const double at = std::abs(t);
        abs_sum += at;
        rounding += (power_rounding(s, w) + kEps * (dn + 2.0)) * at;

        // Tail bound for the terms n+1, n+2, ...
        const double next = dn + 1.0;
        double tail = std::numeric_limits<double>::infinity();
        if (rz < 1.0) {
            double ratio = rz;
            if (s.real() < 0.0)
                ratio = rz * std::pow(1.0 + 1.0 / (std::abs(u) + next), -s.real());
            if (ratio < 1.0) tail = std::pow(rz, next) * term_envelope(s, u, next) / (1.0 - ratio);
        }
        if (s.real() > 1.0) {
            // Integral comparison, valid for any |z| <= 1.
            const double base = u.real() + dn;
            if (base > 0.0) {
                const double phase =
                    std::exp(std::fabs(s.imag()) * std::fabs(std::arg(u + next)));
                tail = std::min(tail, phase * std::pow(base, 1.0 - s.real()) / (s.real() - 1.0));
            }
        }
        if (tail + rounding + 2.0 * kEps * abs_sum <= tol) {
            out.value = sum.value();
            out.abs_err = tail + rounding + 2.0 * kEps * abs_sum;
            out.work = n + 1;
            return out;
        }
        if (tail <= kEps * abs_sum)
            throw ConvergenceError("phi: tolerance below the rounding floor");
    }
    throw ConvergenceError("phi: direct series exceeded its work budget");
}

} // namespace detail

inline void validate(const LerchArgs& a) {
    if (!is_finite(a.z) || !is_finite(a.s) || !is_finite(a.u))
        throw DomainError("phi: non-finite argument");
    if (!(a.u.real() > 0.0)) throw DomainError("phi: requires Re u > 0");
    if (detail::on_branch_cut_beyond_one(a.z)) throw DomainError("phi: z lies on (1, inf)");
    if (a.z == Complex(1.0) && !(a.s.real() > 1.0))
        throw DomainError("phi: z = 1 requires Re s > 1");
}

inline EvalResult phi_quadrature(const LerchArgs& a, double tol) {
    if (!(a.s.real() > 0.0)) throw DomainError("phi: quadrature fallback requires Re s > 0");
    const Complex g = gamma(a.s);
    const double scale = std::abs(g);
    const QuadResult q = lerch_kernel_integral(a.z, a.u, a.s - 1.0, std::min(1e-12, tol * scale));
    EvalResult out;
    out.value = q.value / g;
    out.abs_err = q.abs_err / scale;
    out.method = Method::quadrature_fallback;
    out.work = q.nodes;
    return out;
}

inline EvalResult phi(const LerchArgs& a, double tol, const PhiOptions& opts = {}) {
    validate(a);
    if (!(tol > 0.0)) throw DomainError("phi: tolerance must be positive");
    const double rz = std::abs(a.z);
    if (rz <= 0.9) return detail::direct_series(a, tol, opts.series_budget);
    if (a.z == Complex(1.0)) return hurwitz_zeta(a.s, a.u, tol);
    if (a.z == Complex(-1.0)) {
        if (a.s.real() > 0.0) return alt_lerch(a.s, a.u, tol);
        throw DomainError("phi: z = -1 requires Re s > 0");
    }
    const bool series_region = rz < 1.0 || (rz == 1.0 && a.s.real() > 1.0);
    if (series_region) {
        try {
            return detail::direct_series(a, tol, opts.extended_budget);
        } catch (const ConvergenceError&) {
            if (!opts.allow_quadrature) throw;
        }
        return phi_quadrature(a, tol);
    }
    if (opts.allow_quadrature) return phi_quadrature(a, tol);
    throw DomainError("phi: no series method converges here (|z| >= 1); enable the quadrature fallback");
}

inline EvalResult phi(const Complex& z, const Complex& s, const Complex& u, double tol,
                      const PhiOptions& opts = {}) {
    return phi(LerchArgs{z, s, u}, tol, opts);
}

// Phi(z, s, u+1) through (Phi(z,s,u) - u^{-s}) / z.
inline EvalResult phi_shift_u(const LerchArgs& a, double tol, const PhiOptions& opts = {}) {
    if (std::abs(a.z) < 1e-12) throw DomainError("phi_shift_u: z must be nonzero");
    const double rz = std::abs(a.z);
    EvalResult base = phi(a, tol * rz / 2.0, opts);
    const Complex head = cpow(a.u, -a.s);
    base.value = (base.value - head) / a.z;
    base.abs_err = (base.abs_err + detail::power_rounding(a.s, a.u) * std::abs(head)) / rz +
                   2.0 * kEps * std::abs(base.value);
    return base;
}

// Central difference (Phi(z,s,u+h) - Phi(z,s,u-h)) / 2h for the identity
// Phi(z,s+1,u) = -(1/s) dPhi/du.
inline Complex phi_du_fd(const LerchArgs& a, double h, double tol, const PhiOptions& opts = {}) {
    if (!(h >= 1e-6 && h <= 1e-3)) throw DomainError("phi_du_fd: h must lie in [1e-6, 1e-3]");
    if (!(a.u.real() - h > 0.0)) throw DomainError("phi_du_fd: requires Re u - h > 0");
    const EvalResult plus = phi(LerchArgs{a.z, a.s, a.u + h}, tol, opts);
    const EvalResult minus = phi(LerchArgs{a.z, a.s, a.u - h}, tol, opts);
    return (plus.value - minus.value) / (2.0 * h);
}

} // namespace lerchint
