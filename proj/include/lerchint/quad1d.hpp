#pragma once

// Tanh-sinh quadrature on (0, 1) and the log kernels
// int_0^1 t^{w-1} (-ln t)^p / (1 - z t) dt built on it.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"

namespace lerchint {

struct QuadResult {
    Complex value;
    double abs_err = 0.0;
    std::int64_t nodes = 0;
    bool converged = true;
};

struct TanhSinhOptions {
    double tol = 1e-12;
    int max_level = 12;
    // Converge on |S_L - S_{L-1}| <= tol * max(1, |S_L|) instead of <= tol.
    bool relative = false;
    // Return the last estimate with converged = false instead of throwing.
    bool throw_on_failure = true;
};

// An abscissa in (0,1) together with its distance to 1, computed without
// forming 1 - x.
struct Abscissa {
    double x;
    double xc;
};

namespace detail {

inline constexpr int kMinLevel = 3;
// Nodes closer than this to either endpoint are dropped.
inline constexpr double kEndpointCutoff = 1e-300;

template <class F>
Complex call_integrand(F& f, const Abscissa& a) {
    if constexpr (std::is_invocable_v<F&, Abscissa>) {
        return Complex(f(a));
    } else {
        return Complex(f(a.x));
    }
}

// Adds h * sum over t = t0, t0 + step, ... (both signs) of weight * f.
template <class F>
void accumulate_side(F& f, double t0, double step, CompensatedSum& sum, std::int64_t& nodes) {
    for (double t = t0;; t += step) {
        for (int sign : {1, -1}) {
            const double tt = sign * t;
            if (tt == 0.0 && sign < 0) continue;
            const double v = 0.5 * std::numbers::pi * std::sinh(tt);
            const double ev = std::exp(-2.0 * std::fabs(v));
            // small = 1/(1+e^{2|v|}) is the distance to the near endpoint.
            const double small = ev / (1.0 + ev);
            if (small < kEndpointCutoff) return;
            const double large = 1.0 / (1.0 + ev);
            const Abscissa a = v >= 0.0 ? Abscissa{large, small} : Abscissa{small, large};
            const double weight = std::numbers::pi * std::cosh(tt) * small * large;
            const Complex fx = call_integrand(f, a);
            if (!is_finite(fx))
                throw EvaluationError("tanh_sinh: integrand is non-finite at an interior node");
            sum += weight * fx;
            ++nodes;
        }
    }
}

} // namespace detail

// f is callable as f(double x) or f(Abscissa) and returns a real or complex
// value. Level L uses step h = 2^{-L}; the error estimate is the difference
// between the last two levels.
template <class F>
QuadResult tanh_sinh(F&& f, const TanhSinhOptions& opts = {}) {
    CompensatedSum raw;
    std::int64_t nodes = 0;
    detail::accumulate_side(f, 0.0, 1.0, raw, nodes);
    Complex previous = raw.value();
    double h = 1.0;
    QuadResult out;
    for (int level = 1; level <= opts.max_level; ++level) {
        h *= 0.5;
        detail::accumulate_side(f, h, 2.0 * h, raw, nodes);
        const Complex current = raw.value() * h;
        const double diff = std::abs(current - previous);
        out.value = current;
        out.abs_err = diff;
        out.nodes = nodes;
        const double bound = opts.relative ? opts.tol * std::max(1.0, std::abs(current)) : opts.tol;
        if (level >= detail::kMinLevel && diff <= bound) {
            out.converged = true;
            return out;
        }
        previous = current;
    }
    out.converged = false;
    if (opts.throw_on_failure)
        throw ConvergenceError("tanh_sinh: level cap reached before convergence");
    return out;
}

template <class F>
QuadResult tanh_sinh(F&& f, double tol, int max_level = 12) {
    TanhSinhOptions opts;
    opts.tol = tol;
    opts.max_level = max_level;
    return tanh_sinh(std::forward<F>(f), opts);
}

// coeff * t^{w-1} (-ln t)^p / (1 - z t)
struct KernelTerm {
    Complex coeff{1.0};
    Complex w{1.0};
    Complex p{0.0};
    Complex z{0.0};
};

struct ReducedIntegrand {
    std::vector<KernelTerm> terms;
    double prefactor = 1.0;
};

inline void validate(const KernelTerm& k) {
    if (!is_finite(k.coeff) || !is_finite(k.w) || !is_finite(k.p) || !is_finite(k.z))
        throw DomainError("kernel: non-finite parameter");
    if (k.z.imag() == 0.0 && k.z.real() > 1.0) throw DomainError("kernel: z lies on (1, inf)");
    if (!(k.w.real() > 0.0)) throw DomainError("kernel: requires Re w > 0");
    if (k.z == Complex(1.0)) {
        if (!(k.p.real() > 0.0)) throw DomainError("kernel: z = 1 requires Re p > 0");
    } else if (!(k.p.real() > -1.0)) {
        throw DomainError("kernel: requires Re p > -1");
    }
}

namespace detail {

struct LogPoint {
    double log_t;     // ln t
    double minus_log; // -ln t > 0
};

inline LogPoint log_point(const Abscissa& a) {
    const double lt = a.x < 0.5 ? std::log(a.x) : std::log1p(-a.xc);
    return {lt, -lt};
}

// 1 - z t evaluated around the nearer endpoint.
inline Complex one_minus_zt(const Complex& z, const Abscissa& a) {
    if (a.x < 0.5) return 1.0 - z * a.x;
    return (1.0 - z) + z * a.xc;
}

inline Complex kernel_value(const Complex& w, const Complex& p, const Complex& z, const Abscissa& a) {
    const LogPoint lp = log_point(a);
    const Complex expo = (w - 1.0) * lp.log_t + p * std::log(lp.minus_log);
    return std::exp(expo) / one_minus_zt(z, a);
}

} // namespace detail

// int_0^1 t^{w-1} (-ln t)^p / (1 - z t) dt = Gamma(p+1) Phi(z, p+1, w).
// tol is relative to max(1, |value|).
inline QuadResult lerch_kernel_integral(const Complex& z, const Complex& w, const Complex& p,
                                        double tol = 1e-12, int max_level = 12) {
    validate(KernelTerm{1.0, w, p, z});
    TanhSinhOptions opts;
    opts.tol = tol;
    opts.max_level = max_level;
    opts.relative = true;
    return tanh_sinh([&](const Abscissa& a) { return detail::kernel_value(w, p, z, a); }, opts);
}

// prefactor * sum_i coeff_i * int_0^1 kernel_i.
inline QuadResult reduced_eval(const ReducedIntegrand& r, double tol = 1e-12, int max_level = 12) {
    for (const auto& t : r.terms) validate(t);
    for (const auto& t : r.terms)
        if (t.z != r.terms.front().z) throw DomainError("reduced_eval: terms must share z");
    CompensatedSum sum;
    QuadResult out;
    out.value = 0.0;
    out.nodes = 0;
    double err = 0.0;
    for (const auto& t : r.terms) {
        const QuadResult q = lerch_kernel_integral(t.z, t.w, t.p, tol, max_level);
        sum += t.coeff * q.value;
        err += std::abs(t.coeff) * q.abs_err;
        out.nodes += q.nodes;
    }
    out.value = r.prefactor * sum.value();
    out.abs_err = std::fabs(r.prefactor) * err;
    out.nodes = std::max<std::int64_t>(out.nodes, 1);
    return out;
}

} // namespace lerchint
