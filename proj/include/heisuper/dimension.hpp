#ifndef HEISUPER_DIMENSION_HPP
#define HEISUPER_DIMENSION_HPP

#include "heisuper/heisenberg.hpp"

#include <vector>

namespace heisuper {

// Minimal total dimension of a faithful module:
// m + ceil(n/2) + 2 for the even-center family, n + 2 for the odd-center one.
std::size_t mu(const HeisenbergSpec& spec);

/*
 * Super-dimensions realized by minimal faithful modules:
 * even_center: (m+2, ceil(n/2)) and (ceil(n/2), m+2), deduplicated when the
 * two coincide; odd_center: (i+1, n-i+1) for i = 0..n.
 */
std::vector<SuperDim> admissible_superdims(const HeisenbergSpec& spec);

/*
 * Minimal block dimensions over all faithful modules.  mu0 (= mu1) is the
 * least possible even (resp. odd) part; mu01 (= mu10) is the least total
 * dimension among faithful modules attaining that block minimum.
 */
struct MuParts {
    std::size_t mu0 = 0;
    std::size_t mu1 = 0;
    std::size_t mu01 = 0;
    std::size_t mu10 = 0;

    friend bool operator==(const MuParts&, const MuParts&) = default;
};

MuParts mu_parts(const HeisenbergSpec& spec);

struct DimensionReport {
    HeisenbergSpec spec;
    std::size_t algebra_dim = 0;
    std::size_t mu = 0;
    std::size_t zeta = 0;
    std::size_t mu0 = 0;
    std::size_t mu1 = 0;
    std::size_t mu01 = 0;
    std::size_t mu10 = 0;
    std::vector<SuperDim> admissible_superdims;
};

DimensionReport full_report(const HeisenbergSpec& spec);

} // namespace heisuper

#endif
