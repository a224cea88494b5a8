#ifndef HEISUPER_B_FORM_HPP
#define HEISUPER_B_FORM_HPP

#include "heisuper/lie_superalgebra.hpp"
#include "heisuper/linalg.hpp"
#include "heisuper/rng.hpp"

#include <vector>

namespace heisuper {

/*
 * The bilinear form on a graded complement k of the center, defined by
 * [x, y] = B(x, y) z.  B is non-degenerate on k.  Its block structure
 * depends on the parity of z: for an even center the even-even and odd-odd
 * restrictions are each non-degenerate, while for an odd center those
 * diagonal blocks vanish identically (parity forces it) and B is a
 * non-degenerate pairing between the even and odd blocks.
 */
class BForm {
public:
    const LieSuperalgebra& algebra() const { return g_; }
    const Subspace& complement() const { return complement_; }
    const std::vector<std::vector<GaussRational>>& gram() const { return gram_; }
    Parity form_parity() const { return form_parity_; }

    // Parity of the k-th complement basis vector.
    Parity basis_parity(std::size_t k) const { return basis_parities_.at(k); }

    // B(x, y) for x, y in algebra coordinates: the z-coefficient of [x, y].
    GaussRational eval(const GradedVector& x, const GradedVector& y) const;

private:
    friend BForm b_form(const LieSuperalgebra& g, const Subspace& complement);
    BForm(const LieSuperalgebra& g, Subspace complement);

    LieSuperalgebra g_;
    Subspace complement_;
    std::vector<std::vector<GaussRational>> gram_;
    std::vector<Parity> basis_parities_;
    Parity form_parity_ = Parity::even;
};

/*
 * Builds the form for a complement with homogeneous basis satisfying
 * g = complement + F z (direct sum).  Throws std::invalid_argument when the
 * complement fails the direct-sum condition and std::logic_error when the
 * resulting form is degenerate (impossible for the Heisenberg families).
 */
BForm b_form(const LieSuperalgebra& g, const Subspace& complement);

// True iff s is contained in the complement and B vanishes on s x s.
// Throws std::invalid_argument when s is not contained in the complement.
bool is_isotropic(const BForm& b, const Subspace& s);

struct IsotropicSample {
    Subspace subspace;     // in algebra coordinates, graded by construction
    std::size_t even_dim = 0;
    std::size_t odd_dim = 0;
};

/*
 * Random graded isotropic subspace of the complement, grown greedily:
 * homogeneous candidate vectors are sampled and accepted only when they are
 * isotropic, B-orthogonal to everything accepted so far and enlarge the
 * span.  Every returned subspace is certified isotropic by construction.
 */
IsotropicSample random_isotropic_subspace(const BForm& b, Rng& rng);

} // namespace heisuper

#endif
