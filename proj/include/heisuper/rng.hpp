#ifndef HEISUPER_RNG_HPP
#define HEISUPER_RNG_HPP

#include "heisuper/gauss_rational.hpp"

#include <cstdint>
#include <random>

namespace heisuper {

// Seeded source of small exact scalars for randomized checks and samplers.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng_);
    }

    bool coin() { return integer(0, 1) == 1; }

    mpq_class rational(long bound = 6) {
        mpq_class q(integer(-bound, bound), integer(1, bound));
        q.canonicalize();
        return q;
    }

    GaussRational real_scalar(long bound = 6) { return GaussRational(rational(bound)); }

    GaussRational scalar(long bound = 6) {
        return GaussRational(rational(bound), rational(bound));
    }

    GaussRational nonzero_scalar(long bound = 6) {
        for (;;) {
            GaussRational s = scalar(bound);
            if (!s.is_zero()) return s;
        }
    }

    GaussRational nonzero_real_scalar(long bound = 6) {
        for (;;) {
            GaussRational s = real_scalar(bound);
            if (!s.is_zero()) return s;
        }
    }

private:
    std::mt19937_64 eng_;
};

} // namespace heisuper

#endif
