#pragma once

// Closed-form right-hand sides of the cube-integral identities, the exact
// cube integrands, and a verification engine comparing the closed forms
// against two independent left-hand-side estimates: the simplex reduction
// integrated by tanh-sinh, and direct randomized QMC over the cube.

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"
#include "lerch.hpp"
#include "qmc.hpp"
#include "quad1d.hpp"
#include "simplex.hpp"
#include "special.hpp"

namespace lerchint {

struct RhsValue {
    Complex value;
    double abs_err = 0.0;
    // Set when a difference quotient in u - v loses precision (|u - v| < 1e-3).
    bool cancellation_warning = false;
};

// Gamma(a) * Phi(z, b, c) summands of a closed form, plus an optional
// coeff * base^exponent term.
struct ClosedForm {
    struct Term {
        Complex coeff;
        Complex gamma_arg;
        LerchArgs phi_args;
    };
    struct PowerTerm {
        Complex coeff;
        Complex base;
        Complex exponent;
    };
    std::vector<Term> terms;
    std::optional<PowerTerm> power_term;
};

inline constexpr double kCancellationThreshold = 1e-3;
// Relative accuracy requested from every Phi evaluation.
inline constexpr double kPhiRelTol = 1e-13;

inline RhsValue evaluate(const ClosedForm& form) {
    CompensatedSum sum;
    double err = 0.0;
    for (const auto& t : form.terms) {
        const Complex g = gamma(t.gamma_arg);
        const double scale = 1.0 + std::abs(cpow(t.phi_args.u, -t.phi_args.s));
        const EvalResult p = phi(t.phi_args, kPhiRelTol * scale);
        const Complex c = t.coeff * g;
        sum += c * p.value;
        err += std::abs(c) * (p.abs_err + 4.0 * kEps * std::abs(p.value));
    }
    if (form.power_term) {
        const auto& pt = *form.power_term;
        const Complex v = pt.coeff * cpow(pt.base, pt.exponent);
        sum += v;
        err += detail::power_rounding(pt.exponent, pt.base) * std::abs(v);
    }
    return {sum.value(), err + 2.0 * kEps * std::abs(sum.value()), false};
}

inline double inv_factorial(int n) { return 1.0 / static_cast<double>(factorial(n)); }

// Gamma(s+m-1)/(m-2)! (Phi(z,s+m-1,v) - Phi(z,s+m-1,u)) / (u - v)
inline ClosedForm theorem3_pair_form(int m, const Complex& z, const Complex& s, const Complex& u,
                                     const Complex& v) {
    validate(IntegrandSpec{m, Family::f_kernel, {u, v}, z, s});
    const Complex sigma = s + static_cast<double>(m - 1);
    const Complex c = inv_factorial(m - 2) / (u - v);
    ClosedForm f;
    f.terms.push_back({c, sigma, {z, sigma, v}});
    f.terms.push_back({-c, sigma, {z, sigma, u}});
    return f;
}

inline RhsValue rhs_theorem3_pair(int m, const Complex& z, const Complex& s, const Complex& u,
                                  const Complex& v) {
    RhsValue r = evaluate(theorem3_pair_form(m, z, s, u, v));
    r.cancellation_warning = std::abs(u - v) < kCancellationThreshold;
    return r;
}

// Gamma(s+m)/(m-1)! Phi(z, s+m, u)
inline ClosedForm theorem3_symmetric_form(int m, const Complex& z, const Complex& s,
                                          const Complex& u) {
    validate(IntegrandSpec{m, Family::symmetric, {u}, z, s});
    const Complex sigma = s + static_cast<double>(m);
    ClosedForm f;
    f.terms.push_back({inv_factorial(m - 1), sigma, {z, sigma, u}});
    return f;
}

inline RhsValue rhs_theorem3_symmetric(int m, const Complex& z, const Complex& s, const Complex& u) {
    return evaluate(theorem3_symmetric_form(m, z, s, u));
}

// Gamma(s+m)/(m-2)! [Phi(z,s+m,u) + ((1-z) Phi(z,s+m-1,u) - u^{-s-m+1}) / (z (s+m-1))]
inline ClosedForm theorem4_form(int m, const Complex& z, const Complex& s, const Complex& u) {
    validate(IntegrandSpec{m, Family::theorem4_kernel, {u}, z, s});
    if (std::abs(z) < 1e-12) throw DomainError("rhs_theorem4: z must be nonzero");
    const Complex sigma = s + static_cast<double>(m - 1);
    if (std::abs(sigma) < 1e-9) throw DomainError("rhs_theorem4: s + m - 1 must be nonzero");
    // Gamma(s+m) / (z (s+m-1)) = Gamma(s+m-1) / z
    const double pre = inv_factorial(m - 2);
    ClosedForm f;
    f.terms.push_back({pre, sigma + 1.0, {z, sigma + 1.0, u}});
    if (z != Complex(1.0)) f.terms.push_back({pre * (1.0 - z) / z, sigma, {z, sigma, u}});
    f.power_term = ClosedForm::PowerTerm{-pre * gamma(sigma) / z, u, -sigma};
    return f;
}

inline RhsValue rhs_theorem4(int m, const Complex& z, const Complex& s, const Complex& u) {
    return evaluate(theorem4_form(m, z, s, u));
}

// Gamma(s+1) sum_i Phi(z, s+1, u_i) / prod_{j != i} (u_j - u_i)
inline ClosedForm theorem5_form(std::span<const Complex> us, const Complex& z, const Complex& s) {
    validate(IntegrandSpec{static_cast<int>(us.size()), Family::distinct_exponents,
                           std::vector<Complex>(us.begin(), us.end()), z, s});
    const Complex sigma = s + 1.0;
    ClosedForm f;
    for (std::size_t i = 0; i < us.size(); ++i) {
        Complex denom = 1.0;
        for (std::size_t j = 0; j < us.size(); ++j)
            if (j != i) denom *= us[j] - us[i];
        f.terms.push_back({1.0 / denom, sigma, {z, sigma, us[i]}});
    }
    return f;
}

inline RhsValue rhs_theorem5(std::span<const Complex> us, const Complex& z, const Complex& s) {
    return evaluate(theorem5_form(us, z, s));
}

// Alternate route to the theorem4 closed form: (m-1) times the symmetric
// form minus the pair form at (u+1, u), with Phi(z, s+m-1, u+1) rewritten by
// the shift recurrence.
inline RhsValue rhs_theorem4_decomposed(int m, const Complex& z, const Complex& s, const Complex& u) {
    const RhsValue sym = rhs_theorem3_symmetric(m, z, s, u);
    const Complex sigma = s + static_cast<double>(m - 1);
    const double scale = 1.0 + std::abs(cpow(u, -sigma));
    const EvalResult at_u = phi(LerchArgs{z, sigma, u}, kPhiRelTol * scale);
    const EvalResult at_u1 = phi_shift_u(LerchArgs{z, sigma, u}, kPhiRelTol * scale);
    const Complex pair_pre = gamma(sigma) * inv_factorial(m - 2);
    const Complex pair = pair_pre * (at_u.value - at_u1.value);
    RhsValue out;
    out.value = static_cast<double>(m - 1) * sym.value - pair;
    out.abs_err = (m - 1) * sym.abs_err + std::abs(pair_pre) * (at_u.abs_err + at_u1.abs_err);
    return out;
}

inline RhsValue rhs_for(const IntegrandSpec& spec) {
    validate(spec);
    switch (spec.family) {
    case Family::symmetric: return rhs_theorem3_symmetric(spec.m, spec.z, spec.s, spec.exponents[0]);
    case Family::f_kernel:
        return rhs_theorem3_pair(spec.m, spec.z, spec.s, spec.exponents[0], spec.exponents[1]);
    case Family::theorem4_kernel: return rhs_theorem4(spec.m, spec.z, spec.s, spec.exponents[0]);
    case Family::distinct_exponents: return rhs_theorem5(spec.exponents, spec.z, spec.s);
    }
    throw DomainError("unknown family");
}

using CubeIntegrand = std::function<Complex(std::span<const double>)>;

// The cube integrand of spec.family at a point of (0,1)^m, with
// P = x_1 ... x_m and L = -ln P:
//   distinct-exponents  prod x_i^{u_i-1} L^s / (1 - zP)
//   symmetric           P^{u-1} L^s / (1 - zP)
//   f-kernel            F_{m,u,v}(x) L^s / (1 - zP)
//   theorem4-kernel     (m-1 - x_1 - x_1x_2 - ... - x_1..x_{m-1}) P^{u-1} L^s / (1 - zP)
inline CubeIntegrand build_integrand(const IntegrandSpec& spec) {
    validate(spec);
    return [spec](std::span<const double> x) -> Complex {
        const int m = spec.m;
        // prefix[k] = ln(x_1 ... x_{k+1})
        std::array<double, kMaxDimension> prefix{};
        double acc = 0.0;
        for (int i = 0; i < m; ++i) {
            acc += std::log(x[i]);
            prefix[i] = acc;
        }
        const double L = -acc;
        const Complex z = spec.z;
        // 1 - zP = (1 - z) + z (1 - P), 1 - P = -expm1(-L)
        const Complex denom = (1.0 - z) + z * (-std::expm1(-L));
        const Complex log_power = spec.s == Complex(0.0) ? Complex(1.0) : std::exp(spec.s * std::log(L));
        Complex numer;
        switch (spec.family) {
        case Family::symmetric: numer = std::exp((spec.exponents[0] - 1.0) * acc); break;
        case Family::distinct_exponents: {
            Complex e = 0.0;
            for (int i = 0; i < m; ++i) e += (spec.exponents[i] - 1.0) * std::log(x[i]);
            numer = std::exp(e);
            break;
        }
        case Family::f_kernel: {
            const Complex u = spec.exponents[0], v = spec.exponents[1];
            Complex partial = 0.0;
            for (int k = 0; k < m - 1; ++k) partial += std::exp((u - v) * prefix[k]);
            numer = std::exp((v - 1.0) * acc) * partial;
            break;
        }
        case Family::theorem4_kernel: {
            // m-1 - sum_k e^{prefix_k} = sum_k (1 - e^{prefix_k})
            double defect = 0.0;
            for (int k = 0; k < m - 1; ++k) defect += -std::expm1(prefix[k]);
            numer = defect * std::exp((spec.exponents[0] - 1.0) * acc);
            break;
        }
        }
        return numer * log_power / denom;
    };
}

struct QmcOptions {
    std::size_t points = 65536;
    int replicates = 8;
    std::uint64_t seed = 1;
    int threads = 1;
};

struct VerifyOptions {
    double tol = 1e-8;
    std::optional<QmcOptions> qmc;
    double qmc_sigma_limit = 3.0;
};

struct VerificationReport {
    IntegrandSpec spec;
    Complex rhs;
    double rhs_abs_err = 0.0;
    QuadResult lhs_reduced;
    std::optional<QmcResult> lhs_qmc;
    std::string qmc_skipped_reason;
    double abs_gap_reduced = 0.0;
    double rel_gap_reduced = 0.0;
    std::optional<double> qmc_sigma_gap;
    bool cancellation_warning = false;
    double tol = 0.0;
    double qmc_sigma_limit = 3.0;
    std::string error;
    bool pass = false;
};

// Empty when plain QMC has bounded integrand and so a meaningful standard
// error; otherwise the reason it is skipped.
inline std::string qmc_gate(const IntegrandSpec& spec) {
    if (spec.s.real() < 0.0) return "QMC requires Re s >= 0";
    for (const auto& u : spec.exponents)
        if (u.real() < 1.0) return "QMC requires every exponent to have Re >= 1";
    if (spec.z == Complex(1.0) && spec.s.real() < 1.0)
        return "QMC at z = 1 requires Re s >= 1 (1/(1-P) is otherwise unbounded)";
    if (spec.m > kMaxHaltonDims) return "QMC supports m <= 20";
    return {};
}

inline double relative_gap(const Complex& reference, const Complex& estimate) {
    const double gap = std::abs(reference - estimate);
    const double scale = std::abs(reference);
    return scale > 1e-300 ? gap / scale : gap;
}

inline double quad_tol_for(double tol) { return std::max(1e-14, std::min(1e-12, tol * 1e-2)); }

inline void finish(VerificationReport& r) {
    r.abs_gap_reduced = std::abs(r.rhs - r.lhs_reduced.value);
    r.rel_gap_reduced = relative_gap(r.rhs, r.lhs_reduced.value);
    if (r.lhs_qmc) {
        const double gap = std::abs(r.lhs_qmc->estimate - r.rhs);
        const double se = r.lhs_qmc->std_err;
        r.qmc_sigma_gap = se > 0.0 ? gap / se : (gap == 0.0 ? 0.0 : HUGE_VAL);
    }
    r.pass = r.error.empty() && r.rel_gap_reduced <= r.tol &&
             (!r.lhs_qmc || *r.qmc_sigma_gap <= r.qmc_sigma_limit);
}

inline VerificationReport verify(const IntegrandSpec& spec, const VerifyOptions& opts = {}) {
    VerificationReport r;
    r.spec = spec;
    r.tol = opts.tol;
    r.qmc_sigma_limit = opts.qmc_sigma_limit;
    try {
        const RhsValue rhs = rhs_for(spec);
        r.rhs = rhs.value;
        r.rhs_abs_err = rhs.abs_err;
        r.cancellation_warning = rhs.cancellation_warning;
        r.lhs_reduced = reduced_eval(reduce(spec), quad_tol_for(opts.tol));
        if (opts.qmc) {
            r.qmc_skipped_reason = qmc_gate(spec);
            if (r.qmc_skipped_reason.empty()) {
                const auto& q = *opts.qmc;
                r.lhs_qmc = qmc_estimate(build_integrand(spec), spec.m, q.points, q.replicates,
                                         q.seed, q.threads);
            }
        }
    } catch (const Error& e) {
        r.error = e.what();
    }
    finish(r);
    return r;
}

// Checks factor * I_m(s - m + 2) = I_2(s) for the spec's family, both sides
// through the reduced path; factor is (m-1)! for the symmetric family and
// (m-2)! otherwise. In the report rhs holds I_2(s) and lhs_reduced the
// scaled m-dimensional value.
inline VerificationReport verify_dimension_lift(int m, const IntegrandSpec& spec2,
                                                const VerifyOptions& opts = {}) {
    VerificationReport r;
    r.spec = spec2;
    r.tol = opts.tol;
    r.qmc_sigma_limit = opts.qmc_sigma_limit;
    try {
        if (spec2.m != 2) throw DomainError("verify_dimension_lift: base spec must have m = 2");
        if (spec2.family == Family::distinct_exponents)
            throw DomainError("verify_dimension_lift: no lift for distinct exponents");
        if (m < 1 || (m < 2 && spec2.family != Family::symmetric))
            throw DomainError("verify_dimension_lift: invalid target dimension");
        IntegrandSpec lifted = spec2;
        lifted.m = m;
        lifted.s = spec2.s - static_cast<double>(m - 2);
        r.spec = lifted;
        const double factor = spec2.family == Family::symmetric
                                  ? static_cast<double>(factorial(m - 1))
                                  : static_cast<double>(factorial(m - 2));
        const double qt = quad_tol_for(opts.tol);
        const QuadResult base = reduced_eval(reduce(spec2), qt);
        QuadResult high = reduced_eval(reduce(lifted), qt);
        high.value *= factor;
        high.abs_err *= factor;
        r.rhs = base.value;
        r.rhs_abs_err = base.abs_err;
        r.lhs_reduced = high;
    } catch (const Error& e) {
        r.error = e.what();
    }
    finish(r);
    return r;
}

// Independent reports; the output order matches the input order.
inline std::vector<VerificationReport> verify_batch(const std::vector<IntegrandSpec>& specs,
                                                    const VerifyOptions& opts, int threads = 1) {
    std::vector<VerificationReport> out(specs.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < specs.size(); ++i) out[i] = verify(specs[i], opts);
        return out;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < specs.size(); i += threads) out[i] = verify(specs[i], opts);
        });
    for (auto& t : pool) t.join();
    return out;
}

} // namespace lerchint
