#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace ballot_rates {

/// splitmix64 finalizer; used to derive independent RNG streams from
/// (seed, n, trial) tuples so parallel work is reproducible regardless of
/// scheduling.
std::uint64_t mix64(std::uint64_t x);
std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

/// Seeded RNG with platform-independent uniform mappings. std::mt19937_64 is
/// bit-stable across implementations; the distributions in <random> are not,
/// so this wrapper does its own.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n). Rejection sampling, unbiased.
    std::uint64_t below(std::uint64_t n);

    /// Fisher-Yates shuffle of v[first, last).
    template <typename T>
    void shuffle(std::vector<T>& v, std::size_t first, std::size_t last) {
        for (std::size_t i = last - 1; i > first; --i) {
            std::size_t j = first + static_cast<std::size_t>(below(i - first + 1));
            std::swap(v[i], v[j]);
        }
    }

private:
    std::mt19937_64 eng_;
};

/// Golden-section minimization of a unimodal function on [lo, hi].
/// Refines until the bracket is narrower than xtol.
struct MinimizeResult {
    double x;
    double fx;
};
MinimizeResult minimize_unimodal(const std::function<double(double)>& f,
                                 double lo, double hi, double xtol);

/// Thread cap: BALLOT_RATES_THREADS if set, else hardware concurrency.
int thread_cap();

/// Runs fn(i) for i in [0, n). May use up to thread_cap() threads; callers
/// must make fn(i) write only to slot i of preallocated output so results
/// are identical to sequential evaluation. Exceptions are rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace ballot_rates
