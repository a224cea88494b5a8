#ifndef HEISUPER_LINALG_HPP
#define HEISUPER_LINALG_HPP

#include "heisuper/graded_vector.hpp"
#include "heisuper/super_matrix.hpp"

#include <vector>

namespace heisuper {

namespace detail {

using Row = std::vector<GaussRational>;
using Mat = std::vector<Row>;

/*
 * Reduced row echelon form computed by fraction-free (Bareiss-style)
 * forward elimination followed by exact normalization.  The forward pass
 * divides only by the previous pivot, which keeps intermediate entries from
 * blowing up; all arithmetic is exact either way.  Pivot choice is the
 * first nonzero entry in column order, so the result is deterministic.
 */
struct Rref {
    Mat rows;                        // rank many rows, pivots normalized to 1
    std::vector<std::size_t> pivots; // pivot column of each row, increasing
    std::size_t cols = 0;

    std::size_t rank() const { return pivots.size(); }

    // Reduces coords in place against the rows; afterwards coords is zero
    // iff the original vector lay in the row space.
    void reduce_in_place(Row& coords) const;
};

Rref reduce(Mat m);

} // namespace detail

// Exact rank of a set of vectors sharing one ambient dimension.
std::size_t rank(const std::vector<GradedVector>& vectors);

class Subspace;

/*
 * Null space of the linear map out of `domain` whose j-th basis vector maps
 * to map_columns[j].  All columns must share one ambient dimension.  The
 * kernel dimension is #columns - rank.
 */
Subspace kernel(const std::vector<GradedVector>& map_columns, SuperDim domain);

// Exact inverse of a square matrix; throws std::domain_error when singular.
SuperMatrix inverse(const SuperMatrix& m);

/*
 * Span given by exact basis vectors in ambient coordinates.  The basis is
 * verified linearly independent at construction.  A subspace is graded when
 * it admits a homogeneous basis; with the even-block-first convention the
 * reduced echelon basis of a graded subspace is itself homogeneous.
 */
class Subspace {
public:
    Subspace(SuperDim ambient, std::vector<GradedVector> basis);

    static Subspace zero(SuperDim ambient) { return Subspace(ambient, {}); }

    // Reduces a spanning set to a canonical (reduced echelon) basis.
    static Subspace from_span(SuperDim ambient, const std::vector<GradedVector>& spanning);

    SuperDim ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<GradedVector>& basis() const { return basis_; }

    bool contains(const GradedVector& v) const;
    bool contains_subspace(const Subspace& s) const;

    bool is_graded() const;

    // (even, odd) dimensions; throws std::logic_error when not graded.
    SuperDim super_dim() const;

private:
    SuperDim ambient_;
    std::vector<GradedVector> basis_;
    detail::Rref rref_; // of the basis rows, for containment tests
};

} // namespace heisuper

#endif
