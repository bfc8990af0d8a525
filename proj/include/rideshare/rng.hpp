#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace rideshare {

// The std::*_distribution adapters are not pinned by the standard, so the
// draws below are written out explicitly on top of mt19937_64 (whose output
// sequence is standardized). Identical seeds then yield identical streams on
// every platform.

// Uniform in [0, 1), 53-bit resolution.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Exponential with the given rate; strictly positive and finite.
inline double exp_draw(std::mt19937_64& rng, double rate) {
    double u = (static_cast<double>(rng() >> 12) + 0.5) * 0x1.0p-52;  // (0, 1)
    return -std::log(u) / rate;
}

// splitmix64 finalizer; derives independent seeds from (seed, tag) pairs.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Draws indices proportional to a fixed non-negative weight vector.
class DiscreteSampler {
public:
    explicit DiscreteSampler(const std::vector<double>& weights) {
        cum_.reserve(weights.size());
        double total = 0;
        for (double w : weights) {
            if (w < 0) throw std::invalid_argument("negative weight");
            total += w;
            cum_.push_back(total);
        }
        if (!(total > 0)) throw std::invalid_argument("weights sum to zero");
    }

    int operator()(std::mt19937_64& rng) const {
        double u = uniform01(rng) * cum_.back();
        auto it = std::upper_bound(cum_.begin(), cum_.end(), u);
        if (it == cum_.end()) --it;  // u == total cannot happen, but stay safe
        return static_cast<int>(it - cum_.begin());
    }

private:
    std::vector<double> cum_;
};

}  // namespace rideshare
