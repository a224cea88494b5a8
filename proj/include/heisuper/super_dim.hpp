#ifndef HEISUPER_SUPER_DIM_HPP
#define HEISUPER_SUPER_DIM_HPP

#include <cstddef>
#include <stdexcept>

namespace heisuper {

// Z2 parity of a basis element, module coordinate or matrix index.
enum class Parity : unsigned char { even = 0, odd = 1 };

inline Parity parity_sum(Parity a, Parity b) {
    return static_cast<Parity>((static_cast<unsigned>(a) + static_cast<unsigned>(b)) & 1u);
}

// (-1)^{|a||b|}, the sign in the graded commutator and in super skew-symmetry.
inline int koszul_sign(Parity a, Parity b) {
    return (a == Parity::odd && b == Parity::odd) ? -1 : 1;
}

/*
 * Dimensions of the even and odd blocks of a graded space.
 *
 * One global convention: the even block always comes first, so 0-based
 * indices 0..even-1 are even and even..even+odd-1 are odd.
 */
struct SuperDim {
    std::size_t even = 0;
    std::size_t odd = 0;

    std::size_t total() const { return even + odd; }

    Parity parity_of(std::size_t idx) const {
        if (idx >= total())
            throw std::out_of_range("SuperDim::parity_of: index out of range");
        return idx < even ? Parity::even : Parity::odd;
    }

    SuperDim flipped() const { return SuperDim{odd, even}; }

    friend bool operator==(const SuperDim&, const SuperDim&) = default;
};

} // namespace heisuper

#endif
