#ifndef HEISUPER_HEISENBERG_HPP
#define HEISUPER_HEISENBERG_HPP

#include "heisuper/lie_superalgebra.hpp"
#include "heisuper/linalg.hpp"

#include <string>
#include <vector>

namespace heisuper {

/*
 * The two Heisenberg families, split by the parity of the 1-dimensional
 * center.
 *
 * even_center(m, n): basis (u_1..u_m, v_1..v_m, z | w_1..w_n) with
 *   [u_i, v_i] = -[v_i, u_i] = z = [w_j, w_j], everything else zero.
 * odd_center(n): basis (v_1..v_n | z, w_1..w_n) with
 *   [v_i, w_i] = z = -[w_i, v_i], everything else zero.
 *
 * even_center(0,0) and odd_center(0) are rejected: the bracket would be
 * identically zero and the two-step-nilpotent / 1-dimensional-center
 * characterization breaks down.
 */
enum class Family { even_center, odd_center };

struct HeisenbergSpec {
    Family family = Family::even_center;
    std::size_t m = 0; // even_center only
    std::size_t n = 0;

    static HeisenbergSpec even_center(std::size_t m, std::size_t n) {
        return HeisenbergSpec{Family::even_center, m, n};
    }
    static HeisenbergSpec odd_center(std::size_t n) {
        return HeisenbergSpec{Family::odd_center, 0, n};
    }

    bool valid() const {
        return family == Family::even_center ? (m + n >= 1) : (n >= 1);
    }
    void ensure_valid() const;

    std::size_t dim() const {
        return family == Family::even_center ? 2 * m + 1 + n : 2 * n + 1;
    }
    SuperDim algebra_super_dim() const {
        return family == Family::even_center ? SuperDim{2 * m + 1, n} : SuperDim{n, n + 1};
    }

    std::string str() const;

    friend bool operator==(const HeisenbergSpec&, const HeisenbergSpec&) = default;
};

LieSuperalgebra make_heisenberg(const HeisenbergSpec& spec);

// Largest dimension of an abelian subalgebra avoiding the center:
// m + floor(n/2) for the even-center family, n for the odd-center family.
std::size_t zeta(const HeisenbergSpec& spec);

// The coordinate subspace spanned by every basis element except z.
Subspace canonical_complement(const LieSuperalgebra& g);

// Super-dimensions for which abelian_witness has a construction:
// {(m, floor(n/2))} for even_center and {(i, n-i) : 0 <= i <= n} for odd_center.
std::vector<SuperDim> admissible_witness_targets(const HeisenbergSpec& spec);

/*
 * Concrete abelian subalgebra avoiding z with the requested super-dimension.
 * even_center: span{u_1..u_m} plus the pair vectors w_{2k-1} + i*w_{2k};
 * odd_center with target (i, n-i): span{v_1..v_i, w_{i+1}..w_n}.
 * Throws std::invalid_argument for targets outside the admissible list.
 */
Subspace abelian_witness(const HeisenbergSpec& spec, SuperDim target);

// True iff every pair of basis vectors of s brackets to zero and z is not
// in the span of s.
bool is_abelian_excluding_center(const LieSuperalgebra& g, const Subspace& s);

} // namespace heisuper

#endif
