#pragma once

// Randomly shifted Halton estimation of integrals over the open unit cube.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <exception>
#include <random>
#include <span>
#include <thread>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"

namespace lerchint {

struct QmcResult {
    Complex estimate;
    double std_err = 0.0;
    std::size_t points = 0;
    int replicates = 0;
    std::uint64_t seed = 0;
};

inline constexpr int kMaxHaltonDims = 20;
inline constexpr std::array<unsigned, kMaxHaltonDims> kHaltonBases = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71};

inline double radical_inverse(std::uint64_t n, unsigned base) {
    const double inv = 1.0 / base;
    double f = inv;
    double r = 0.0;
    while (n > 0) {
        r += static_cast<double>(n % base) * f;
        n /= base;
        f *= inv;
    }
    return r;
}

// Point `index` of the Halton sequence; the sequence starts at 1 so no
// coordinate is 0.
inline void halton_point(std::uint64_t index, std::span<double> out) {
    if (out.empty() || out.size() > kMaxHaltonDims)
        throw DomainError("halton_point: dims must lie in [1, 20]");
    for (std::size_t d = 0; d < out.size(); ++d) out[d] = radical_inverse(index + 1, kHaltonBases[d]);
}

inline std::vector<double> halton_point(std::uint64_t index, int dims) {
    if (dims < 1 || dims > kMaxHaltonDims) throw DomainError("halton_point: dims must lie in [1, 20]");
    std::vector<double> p(static_cast<std::size_t>(dims));
    halton_point(index, p);
    return p;
}

namespace detail {

// Uniform shift in [0, 1) per coordinate, from a generator keyed on
// (seed, replicate) so every replicate is reproducible on its own.
inline std::vector<double> replicate_shift(std::uint64_t seed, int replicate, int dims) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(replicate), 0x9e3779b9u};
    std::mt19937_64 gen(seq);
    std::vector<double> shift(static_cast<std::size_t>(dims));
    for (auto& c : shift) c = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    return shift;
}

inline double wrap_open(double y) {
    if (y >= 1.0) y -= 1.0;
    if (y <= 0.0) y = 0x1.0p-53;
    if (y >= 1.0) y = std::nextafter(1.0, 0.0);
    return y;
}

template <class F>
Complex replicate_mean(const F& f, int m, std::size_t points, std::uint64_t seed, int replicate) {
    const std::vector<double> shift = replicate_shift(seed, replicate, m);
    std::vector<double> x(static_cast<std::size_t>(m));
    CompensatedSum sum;
    for (std::size_t i = 0; i < points; ++i) {
        halton_point(i, x);
        for (int d = 0; d < m; ++d) x[d] = wrap_open(x[d] + shift[d]);
        const Complex v = Complex(f(std::span<const double>(x)));
        if (!is_finite(v)) throw EvaluationError("qmc_estimate: integrand is non-finite");
        sum += v;
    }
    return sum.value() / static_cast<double>(points);
}

} // namespace detail

// Cranley-Patterson estimator: replicate r integrates f over the Halton set
// shifted by an independent uniform vector modulo 1. The estimate is the
// mean of replicate means and std_err their sample standard deviation over
// sqrt(replicates). Replicates may run on `threads` workers; each replicate
// is summed sequentially and the means are combined in replicate order.
template <class F>
QmcResult qmc_estimate(const F& f, int m, std::size_t points, int replicates, std::uint64_t seed,
                       int threads = 1) {
    if (m < 1 || m > kMaxHaltonDims) throw DomainError("qmc_estimate: m must lie in [1, 20]");
    if (points < 1) throw DomainError("qmc_estimate: needs at least one point");
    if (replicates < 2) throw DomainError("qmc_estimate: needs at least two replicates");
    if (threads < 1) threads = 1;

    std::vector<Complex> means(static_cast<std::size_t>(replicates));
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(replicates));
    auto run = [&](int r) {
        try {
            means[r] = detail::replicate_mean(f, m, points, seed, r);
        } catch (...) {
            failures[r] = std::current_exception();
        }
    };
    if (threads == 1) {
        for (int r = 0; r < replicates; ++r) run(r);
    } else {
        std::vector<std::thread> pool;
        const int workers = std::min(threads, replicates);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (int r = w; r < replicates; r += workers) run(r);
            });
        for (auto& t : pool) t.join();
    }
    for (auto& e : failures)
        if (e) std::rethrow_exception(e);

    CompensatedSum total;
    for (const auto& v : means) total += v;
    const Complex mean = total.value() / static_cast<double>(replicates);
    double ss = 0.0;
    for (const auto& v : means) ss += std::norm(v - mean);
    const double sd = std::sqrt(ss / (replicates - 1));

    QmcResult out;
    out.estimate = mean;
    out.std_err = sd / std::sqrt(static_cast<double>(replicates));
    out.points = points;
    out.replicates = replicates;
    out.seed = seed;
    return out;
}

} // namespace lerchint
