#pragma once

// Cube-integral representations of Euler's constant and ln(4/pi):
//
//   c_z = (m-2)! int_{(0,1)^m} (m-1 - x_1 - x_1x_2 - ... - x_1..x_{m-1})
//                                / ((1 - zP) (-ln P)^{m-1}) dx,   P = x_1 ... x_m,
//
// with z = 1 giving gamma and z = -1 giving ln(4/pi). The theorem4-kernel
// reduction at u = 1, s = 1 - m collapses to the m-independent kernel
//
//   int_0^1 (L - (1 - t)) / (L (1 - z t)) dt,   L = -ln t,
//
// which is 1/(1-t) + 1/ln t for z = 1 and (1 - (1-t)/L)/(1+t) for z = -1.

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "complex.hpp"
#include "errors.hpp"
#include "qmc.hpp"
#include "quad1d.hpp"
#include "simplex.hpp"

namespace lerchint {

enum class ConstantName { euler_gamma, ln_4_over_pi };
enum class ConstantMethod { reduced, qmc };

inline std::string_view to_string(ConstantName n) {
    return n == ConstantName::euler_gamma ? "euler-gamma" : "ln-4-over-pi";
}
inline std::string_view to_string(ConstantMethod m) {
    return m == ConstantMethod::reduced ? "reduced" : "qmc";
}

// gamma to 17 significant digits; re-derived in tests from H_n - ln n with
// the Euler-Maclaurin correction.
inline constexpr double kEulerGamma = 0.57721566490153286;
// ln 4 - ln pi; re-derived in tests from long double logarithms.
inline constexpr double kLn4OverPi = 0.24156447527049044;

inline constexpr double kConstantReducedTol = 1e-8;

struct ConstantOptions {
    double tol = 1e-12;
    std::size_t points = 65536;
    int replicates = 8;
    std::uint64_t seed = 1;
    int threads = 1;
};

struct ConstantResult {
    ConstantName name = ConstantName::euler_gamma;
    int m = 2;
    ConstantMethod method = ConstantMethod::reduced;
    double value = 0.0;
    // abs_err for the reduced method, std_err for QMC.
    double error = 0.0;
    double reference = 0.0;
    std::int64_t work = 0;
    bool pass = false;
};

namespace detail {

inline double constant_z(ConstantName n) { return n == ConstantName::euler_gamma ? 1.0 : -1.0; }

// (-ln t - (1 - t)) / (-ln t). Near t = 1 both parts come from the log1p
// series in 1 - t so neither underflows.
inline double log_defect_ratio(const Abscissa& a) {
    if (a.xc < 0.25) {
        // -ln t = xc B, -ln t - xc = xc^2 A
        double a_sum = 0.5, b_sum = 1.0;
        double power = 1.0;
        for (int k = 2; k < 60; ++k) {
            power *= a.xc;
            const double next_a = power / (k + 1);
            a_sum += next_a;
            b_sum += power / k;
            if (next_a < 1e-18) break;
        }
        return a.xc * a_sum / b_sum;
    }
    const double L = -std::log(a.x);
    return (L - a.xc) / L;
}

inline double constant_kernel(double z, const Abscissa& a) {
    const double denom = a.x < 0.5 ? 1.0 - z * a.x : (1.0 - z) + z * a.xc;
    return log_defect_ratio(a) / denom;
}

} // namespace detail

// (m-2)! (m-1 - x_1 - ... - x_1..x_{m-1}) / ((1 - zP) L^{m-1}) at a cube point.
// Below L = 1e-8 the numerator and 1 - zP switch to their second-order
// series in L so the ratio stays finite as P -> 1. At exactly P = 1 the
// ratio has no finite limit and an EvaluationError is raised.
inline double constant_integrand(ConstantName name, int m, std::span<const double> x) {
    const double z = detail::constant_z(name);
    double acc = 0.0;
    double numer = 0.0;
    double prefix[kMaxDimension];
    for (int i = 0; i < m; ++i) {
        acc += std::log(x[i]);
        prefix[i] = acc;
    }
    const double L = -acc;
    if (L == 0.0) throw EvaluationError("constant_integrand: unbounded at the corner P = 1");
    double one_minus_zp;
    if (L < 1e-8) {
        for (int k = 0; k < m - 1; ++k) {
            const double q = -prefix[k];
            numer += q - 0.5 * q * q;
        }
        one_minus_zp = (1.0 - z) + z * (L - 0.5 * L * L);
    } else {
        for (int k = 0; k < m - 1; ++k) numer += -std::expm1(prefix[k]);
        one_minus_zp = (1.0 - z) + z * (-std::expm1(-L));
    }
    return static_cast<double>(factorial(m - 2)) * numer / (one_minus_zp * std::pow(L, m - 1));
}

inline ConstantResult constant_via_integral(ConstantName name, int m, ConstantMethod method,
                                            const ConstantOptions& opts = {}) {
    if (m < 2) throw DomainError("constants: m must be an integer > 1");
    if (m > 6) throw DomainError("constants: m must lie in [2, 6]");
    ConstantResult r;
    r.name = name;
    r.m = m;
    r.method = method;
    r.reference = name == ConstantName::euler_gamma ? kEulerGamma : kLn4OverPi;
    const double z = detail::constant_z(name);
    if (method == ConstantMethod::reduced) {
        TanhSinhOptions to;
        to.tol = opts.tol;
        const QuadResult q =
            tanh_sinh([z](const Abscissa& a) { return detail::constant_kernel(z, a); }, to);
        r.value = q.value.real();
        r.error = q.abs_err;
        r.work = q.nodes;
        r.pass = std::fabs(r.value - r.reference) <= kConstantReducedTol;
    } else {
        const QmcResult q = qmc_estimate(
            [name, m](std::span<const double> x) { return constant_integrand(name, m, x); }, m,
            opts.points, opts.replicates, opts.seed, opts.threads);
        r.value = q.estimate.real();
        r.error = q.std_err;
        r.work = static_cast<std::int64_t>(q.points) * q.replicates;
        r.pass = std::fabs(r.value - r.reference) <= 3.0 * r.error;
    }
    return r;
}

inline ConstantResult euler_gamma_via_integral(int m, ConstantMethod method,
                                               const ConstantOptions& opts = {}) {
    return constant_via_integral(ConstantName::euler_gamma, m, method, opts);
}

inline ConstantResult ln4_over_pi_via_integral(int m, ConstantMethod method,
                                               const ConstantOptions& opts = {}) {
    return constant_via_integral(ConstantName::ln_4_over_pi, m, method, opts);
}

} // namespace lerchint
