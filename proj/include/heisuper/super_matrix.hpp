#ifndef HEISUPER_SUPER_MATRIX_HPP
#define HEISUPER_SUPER_MATRIX_HPP

#include "heisuper/gauss_rational.hpp"
#include "heisuper/graded_vector.hpp"
#include "heisuper/super_dim.hpp"

#include <optional>
#include <string>
#include <vector>

namespace heisuper {

/*
 * Dense square matrix over the Gaussian rationals with a declared even/odd
 * split of the index set.  Entry (r,c) has parity |r|+|c|; a matrix is
 * homogeneous of parity p when every nonzero entry has that parity.
 * Non-homogeneous matrices are legal values (sums of homogeneous pieces);
 * homogeneity is a checkable predicate, not a storage constraint.
 *
 * at(r,c) uses 0-based indices.  matrix_unit takes the 1-based (row,col)
 * pair of the usual e_{r,c} notation.
 */
class SuperMatrix {
public:
    explicit SuperMatrix(SuperDim dim) : dim_(dim), e_(dim.total() * dim.total()) {}

    SuperDim dim() const { return dim_; }
    std::size_t total() const { return dim_.total(); }

    const GaussRational& at(std::size_t r, std::size_t c) const { return e_[r * total() + c]; }
    GaussRational& at(std::size_t r, std::size_t c) { return e_[r * total() + c]; }

    bool is_zero() const;

    // True when every nonzero entry has parity p (vacuously true for zero).
    bool is_homogeneous_of(Parity p) const;

    // Parity of a nonzero homogeneous matrix; nullopt for zero or mixed.
    std::optional<Parity> homogeneous_parity() const;

    SuperMatrix& operator+=(const SuperMatrix& o);
    SuperMatrix& operator-=(const SuperMatrix& o);
    SuperMatrix& operator*=(const GaussRational& s);

    friend SuperMatrix operator+(SuperMatrix a, const SuperMatrix& b) { return a += b; }
    friend SuperMatrix operator-(SuperMatrix a, const SuperMatrix& b) { return a -= b; }
    friend SuperMatrix operator*(const GaussRational& s, SuperMatrix m) { return m *= s; }

    SuperMatrix operator*(const SuperMatrix& o) const;
    GradedVector operator*(const GradedVector& v) const;

    friend bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
        return a.dim_ == b.dim_ && a.e_ == b.e_;
    }

    // Entries flattened row-major, for stacking matrices into vectors.
    const std::vector<GaussRational>& flat() const { return e_; }

    std::string str() const;

private:
    SuperDim dim_;
    std::vector<GaussRational> e_;
};

// e_{r,c} with 1-based indices: lone 1 at row r, column c.
SuperMatrix matrix_unit(SuperDim dim, std::size_t r, std::size_t c);

// Graded commutator x*y - (-1)^{|x||y|} y*x; the anticommutator when both
// arguments are odd.  Requires homogeneous inputs of equal dimension (a zero
// argument is accepted and yields zero).
SuperMatrix super_commutator(const SuperMatrix& x, const SuperMatrix& y);

// Parity functor: swaps the even and odd blocks.  The former odd block
// comes first in the result; a matrix is conjugated by the block-exchange
// permutation, which preserves homogeneous parity.
SuperDim parity_flip(SuperDim d);
GradedVector parity_flip(const GradedVector& v);
SuperMatrix parity_flip(const SuperMatrix& m);

} // namespace heisuper

#endif
