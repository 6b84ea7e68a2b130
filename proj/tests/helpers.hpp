#pragma once

#include <cstdint>

#include "zinbiel/catalog.hpp"
#include "zinbiel/morphism.hpp"

namespace testing {

/// Deterministic 64-bit PRNG (splitmix64); tests must not depend on the
/// platform's std::random_device or distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Small rational with numerator in [-9, 9] and denominator in [1, 4].
    zinbiel::Rational rational() {
        long num = static_cast<long>(next() % 19) - 9;
        unsigned long den = 1 + next() % 4;
        return zinbiel::Rational(num, den);
    }

    zinbiel::Rational nonzero_rational() {
        for (;;) {
            zinbiel::Rational r = rational();
            if (!r.is_zero()) return r;
        }
    }

    zinbiel::Vector vector(std::size_t n) {
        zinbiel::Vector v(n);
        for (auto& c : v) c = zinbiel::Scalar(rational());
        return v;
    }

    /// Random rational matrix resampled until the determinant is nonzero.
    zinbiel::LinearMap invertible_map(std::size_t n) {
        for (;;) {
            std::vector<zinbiel::Vector> cols;
            for (std::size_t j = 0; j < n; ++j) cols.push_back(vector(n));
            zinbiel::LinearMap m = zinbiel::LinearMap::from_columns(cols);
            if (m.invertible()) return m;
        }
    }

private:
    std::uint64_t state_;
};

inline zinbiel::AlgebraTable make_named(zinbiel::catalog::Section sec, const std::string& name,
                                        std::optional<std::size_t> n = std::nullopt) {
    return zinbiel::catalog::make({sec, name, n}).table;
}

} // namespace testing
