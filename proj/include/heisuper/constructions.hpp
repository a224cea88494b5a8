#ifndef HEISUPER_CONSTRUCTIONS_HPP
#define HEISUPER_CONSTRUCTIONS_HPP

#include "heisuper/heisenberg.hpp"
#include "heisuper/representation.hpp"

namespace heisuper {

/*
 * Minimal faithful representation of the even-center family on a module of
 * super-dimension (m+2, ceil(n/2)):
 *   u_i       -> e_{1,i+1}
 *   v_i       -> e_{i+1,m+2}
 *   z         -> e_{1,m+2}
 *   w_{2k-1}  -> 1/2 e_{m+2+k,m+2} +   e_{1,m+2+k}
 *   w_{2k}    -> i/2 e_{m+2+k,m+2} - i e_{1,m+2+k}
 */
Representation build_pi_even_center(std::size_t m, std::size_t n);

/*
 * The same family on a module of the exchanged super-dimension
 * (ceil(n/2), m+2), realizing the second admissible shape directly
 * (writing q = ceil(n/2)):
 *   u_i       -> e_{q+1,q+2+i}
 *   v_i       -> e_{q+2+i,q+2}
 *   z         -> e_{q+1,q+2}
 *   w_{2k-1}  -> 1/2 e_{k,q+2} +   e_{q+1,k}
 *   w_{2k}    -> i/2 e_{k,q+2} - i e_{q+1,k}
 */
Representation build_pi_even_center_flipped(std::size_t m, std::size_t n);

/*
 * Minimal faithful representation of the odd-center family on a module of
 * super-dimension (r+1, n-r+1), for every 0 <= r <= n:
 *   v_i -> e_{1,i+1}      (i <= r)        v_j -> -e_{j+1,n+2}  (j > r)
 *   z   -> e_{1,n+2}
 *   w_k -> e_{k+1,n+2}    (k <= r)        w_l -> e_{1,l+1}     (l > r)
 * At r = n this is the classical total-dimension-minimal construction.
 */
Representation build_pi_odd_center(std::size_t n, std::size_t r);

// The module coordinate vector dual to the column in which the image of z
// has its entry; z then maps it to a nonzero vector by construction.
GradedVector canonical_v0(const Representation& r);

} // namespace heisuper

#endif
