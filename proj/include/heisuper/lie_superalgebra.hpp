#ifndef HEISUPER_LIE_SUPERALGEBRA_HPP
#define HEISUPER_LIE_SUPERALGEBRA_HPP

#include "heisuper/graded_vector.hpp"
#include "heisuper/linalg.hpp"
#include "heisuper/super_dim.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace heisuper {

struct BasisElement {
    std::string label;
    Parity parity = Parity::even;
};

struct StructureEntry {
    std::size_t i = 0, j = 0, k = 0;
    GaussRational coeff;
};

/*
 * Lie superalgebra given by a homogeneous basis with parities and a
 * structure-constants tensor c[i][j][k], meaning [x_i, x_j] = sum_k
 * c[i][j][k] x_k, together with the index of the distinguished central
 * element z.  The basis must be even-block-first so algebra coordinates
 * form a graded space under the global convention.
 *
 * Construction validates only shape; whether the tensor satisfies the
 * axioms is the job of check_axioms, so deliberately broken tensors can be
 * built and fed to the checker.
 */
class LieSuperalgebra {
public:
    LieSuperalgebra(std::vector<BasisElement> basis, std::size_t center_index,
                    const std::vector<StructureEntry>& entries);

    std::size_t dim() const { return basis_.size(); }
    SuperDim super_dim() const { return super_dim_; }

    const std::vector<BasisElement>& basis() const { return basis_; }
    const std::string& label(std::size_t i) const { return basis_.at(i).label; }
    Parity parity(std::size_t i) const { return basis_.at(i).parity; }
    std::size_t center_index() const { return center_index_; }

    std::optional<std::size_t> index_of(std::string_view label) const;

    const GaussRational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim() + j) * dim() + k];
    }

    // [x_i, x_j] as a coordinate vector.
    GradedVector bracket_basis(std::size_t i, std::size_t j) const;

    // Bilinear extension of the structure tensor.
    GradedVector bracket(const GradedVector& x, const GradedVector& y) const;

    // Nonzero tensor entries in row-major (i, j, k) order.
    std::vector<StructureEntry> structure_entries() const;

private:
    std::vector<BasisElement> basis_;
    std::size_t center_index_;
    SuperDim super_dim_;
    std::vector<GaussRational> c_;
    // nonzero (k, coeff) pairs per (i, j), for sparse bracket evaluation
    std::vector<std::vector<std::pair<std::size_t, GaussRational>>> sparse_;
};

/*
 * Full axiom audit of a structure tensor: super skew-symmetry, the super
 * Jacobi identity, bracket parity, centrality of the distinguished element,
 * a center that is exactly its line, and two-step nilpotency.  Everything
 * is checked exhaustively over basis tuples with exact arithmetic.
 */
struct AxiomReport {
    bool skew_symmetric = false;
    bool jacobi = false;
    bool bracket_parity = false;
    bool center_element_central = false;
    bool center_is_line = false;
    bool two_step_nilpotent = false;
    std::vector<std::string> findings;

    bool pass() const {
        return skew_symmetric && jacobi && bracket_parity && center_element_central &&
               center_is_line && two_step_nilpotent;
    }
};

AxiomReport check_axioms(const LieSuperalgebra& g);

} // namespace heisuper

#endif
