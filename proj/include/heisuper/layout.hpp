#ifndef HEISUPER_LAYOUT_HPP
#define HEISUPER_LAYOUT_HPP

#include "heisuper/graded_vector.hpp"
#include "heisuper/heisenberg.hpp"
#include "heisuper/super_matrix.hpp"

#include <string>
#include <vector>

namespace heisuper {

/*
 * Symbolic layout of the matrix of a generic algebra element under one of
 * the explicit representation constructions.  Each cell is a tiny symbolic
 * expression over the element coefficients
 *
 *   even_center:  sum a_i u_i + sum b_i v_i + c z + sum d_j w_j
 *   odd_center:   sum a_i v_i + c z + sum b_i w_i
 *
 * The layout serves two purposes: the LaTeX emitter prints it (structural
 * zero cells stay empty, the two traditionally displayed zeros are kept),
 * and instantiate() evaluates it on concrete coefficients so tests can
 * compare the displayed shape entry-by-entry against linear extension of
 * the basis images.
 */
enum class CellKind {
    blank,   // structurally zero
    zero,    // explicitly displayed 0
    coeff_a, // a_i
    coeff_b, // b_i
    neg_a,   // -a_i
    coeff_c, // c
    d_pair,  // d_i - sqrt(-1) d_j
    d_bar,   // (d_i + sqrt(-1) d_j)/2
    d_plain, // d_i
    d_half,  // d_i / 2
};

struct LayoutCell {
    CellKind kind = CellKind::blank;
    std::size_t i = 0; // 1-based coefficient indices
    std::size_t j = 0;
};

struct ElementCoefficients {
    std::vector<GaussRational> a;
    std::vector<GaussRational> b;
    std::vector<GaussRational> d;
    GaussRational c;
};

class GenericLayout {
public:
    GenericLayout(SuperDim dim) : dim_(dim), cells_(dim.total() * dim.total()) {}

    SuperDim dim() const { return dim_; }
    const LayoutCell& cell(std::size_t r, std::size_t c) const {
        return cells_.at(r * dim_.total() + c);
    }

    // 1-based placement, matching the e_{r,c} convention.
    void set(std::size_t r, std::size_t c, LayoutCell cell) {
        cells_.at((r - 1) * dim_.total() + (c - 1)) = cell;
    }

    SuperMatrix instantiate(const ElementCoefficients& coeffs) const;

    // pmatrix with one row per line; blank cells are left empty.
    std::string to_latex() const;

private:
    SuperDim dim_;
    std::vector<LayoutCell> cells_;
};

GenericLayout generic_layout_even_center(std::size_t m, std::size_t n);
GenericLayout generic_layout_even_center_flipped(std::size_t m, std::size_t n);
GenericLayout generic_layout_odd_center(std::size_t n, std::size_t r);

// Coordinates of the generic element in the canonical basis order.
GradedVector element_coordinates_even_center(std::size_t m, std::size_t n,
                                             const ElementCoefficients& coeffs);
GradedVector element_coordinates_odd_center(std::size_t n, const ElementCoefficients& coeffs);

} // namespace heisuper

#endif
