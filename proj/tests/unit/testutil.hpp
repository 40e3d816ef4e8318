#pragma once

#include "splinedim/polyring.hpp"
#include "splinedim/qmatrix.hpp"

#include <cstdint>

namespace testutil {

// Deterministic PRNG so frozen expected values stay frozen across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi].
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

inline splinedim::exactla::QMatrix random_int_matrix(SplitMix64& rng, std::size_t rows,
                                                     std::size_t cols, long lo = -9,
                                                     long hi = 9) {
    return splinedim::exactla::QMatrix::from_fn(
        rows, cols, [&](std::size_t, std::size_t) {
            return splinedim::exactla::Rational(rng.range(lo, hi));
        });
}

inline splinedim::polyring::HPoly random_poly(SplitMix64& rng,
                                              const splinedim::polyring::VarList& vars,
                                              int degree, long lo = -5, long hi = 5) {
    splinedim::polyring::MonomialBasis basis(vars, degree);
    std::vector<splinedim::exactla::Rational> coeffs(basis.size());
    for (auto& c : coeffs) c = rng.range(lo, hi);
    return splinedim::polyring::HPoly(vars, degree, std::move(coeffs));
}

} // namespace testutil
