#ifndef HEISUPER_RHO_HPP
#define HEISUPER_RHO_HPP

#include "heisuper/linalg.hpp"
#include "heisuper/representation.hpp"

#include <optional>

namespace heisuper {

/*
 * Analysis of the evaluation map rho: g -> V, x -> x.v0 attached to a
 * homogeneous module vector v0 with z.v0 != 0.
 *
 *   a        kernel of rho, an abelian graded subalgebra avoiding z
 *   b        image of rho inside the module
 *   a_prime  graded complement of a containing z, built greedily from z and
 *            coordinate vectors; any graded subspace containing z is closed
 *            under the bracket here since [g,g] lies in the center line
 *
 * The flags certify: (1) a abelian and z-free, (3) g = a + a_prime direct
 * with z in a_prime and a_prime a subalgebra, (4) the vectors x.v0 for x in
 * a basis of a_prime are independent, rank-nullity, and - engaged only when
 * the caller supplies zeta and dim a reaches it - (2) v0 outside the image.
 */
struct RhoAnalysis {
    GradedVector v0;
    Subspace a;
    Subspace b;
    Subspace a_prime;

    bool a_abelian_z_free = false;
    bool direct_sum = false;
    bool a_prime_subalgebra = false;
    bool images_independent = false;
    bool rank_nullity = false;
    std::optional<bool> v0_not_in_image;

    bool certified() const {
        return a_abelian_z_free && direct_sum && a_prime_subalgebra && images_independent &&
               rank_nullity && (!v0_not_in_image || *v0_not_in_image);
    }
};

// Throws std::invalid_argument when v0 is zero, not homogeneous, or killed
// by the image of z.
RhoAnalysis rho_analysis(const Representation& r, const GradedVector& v0,
                         std::optional<std::size_t> zeta_value = std::nullopt);

} // namespace heisuper

#endif
