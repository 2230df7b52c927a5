#pragma once

// Globally adaptive 7/15-point Gauss-Kronrod integration on a finite
// interval. Used for brute-force oracles; independent of the tanh-sinh rule.

#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"

namespace lerchint::detail {

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights at kKronrodNodes[1], [3], [5], [7].
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b;
    Complex value;
    double err;
    bool operator<(const Segment& o) const { return err < o.err; }
};

template <class F>
Segment gk15(F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double r = 0.5 * (b - a);
    const Complex fc = f(c);
    Complex kron = kKronrodWeights[7] * fc;
    Complex gauss = kGaussWeights[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = r * kKronrodNodes[j];
        const Complex pair = Complex(f(c - dx)) + Complex(f(c + dx));
        kron += kKronrodWeights[j] * pair;
        if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
    }
    return {a, b, kron * r, std::abs((kron - gauss) * r)};
}

struct AdaptiveResult {
    Complex value;
    double abs_err;
    int evaluations;
};

template <class F>
AdaptiveResult gk_adaptive(F&& f, double a, double b, double tol, int max_segments = 4000) {
    std::priority_queue<Segment> heap;
    Segment first = gk15(f, a, b);
    heap.push(first);
    double total_err = first.err;
    int evals = 15;
    while (total_err > tol) {
        if (static_cast<int>(heap.size()) >= max_segments)
            throw ConvergenceError("gk_adaptive: segment budget exhausted");
        Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Segment left = gk15(f, worst.a, mid);
        Segment right = gk15(f, mid, worst.b);
        evals += 30;
        total_err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        if (worst.b - worst.a < 1e-14 * (std::fabs(a) + std::fabs(b) + 1.0)) break;
    }
    // Re-sum so the running error update does not drift.
    CompensatedSum sum;
    double err = 0.0;
    while (!heap.empty()) {
        sum += heap.top().value;
        err += heap.top().err;
        heap.pop();
    }
    return {sum.value(), err, evals};
}

} // namespace lerchint::detail
