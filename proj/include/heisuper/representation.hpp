#ifndef HEISUPER_REPRESENTATION_HPP
#define HEISUPER_REPRESENTATION_HPP

#include "heisuper/lie_superalgebra.hpp"
#include "heisuper/super_matrix.hpp"

#include <string>
#include <vector>

namespace heisuper {

/*
 * Representation of a Lie superalgebra on a graded module, stored as one
 * matrix per basis element.  Whether the assignment actually is a graded
 * homomorphism is certified by verify_representation, not assumed.
 */
class Representation {
public:
    Representation(LieSuperalgebra algebra, SuperDim module_dim,
                   std::vector<SuperMatrix> images);

    const LieSuperalgebra& algebra() const { return algebra_; }
    SuperDim module_dim() const { return module_; }

    const SuperMatrix& image(std::size_t i) const { return images_.at(i); }
    const std::vector<SuperMatrix>& images() const { return images_; }

    // Image of a general algebra element by linear extension.
    SuperMatrix element_image(const GradedVector& x) const;

    // x acting on a module vector.
    GradedVector act(const GradedVector& x, const GradedVector& v) const;

private:
    LieSuperalgebra algebra_;
    SuperDim module_;
    std::vector<SuperMatrix> images_;
};

struct RepReport {
    bool parities_ok = false;      // image parity equals basis-element parity
    bool homomorphism_ok = false;  // image([x,y]) = graded commutator of images
    std::vector<std::string> violations;

    bool pass() const { return parities_ok && homomorphism_ok; }
};

// Checks both representation invariants exhaustively over basis pairs.
RepReport verify_representation(const Representation& r);

/*
 * Faithfulness via the kernel of the linear map x -> image(x).  The result
 * is cross-checked against the center criterion (faithful iff z acts
 * nontrivially), which is equivalent for any verified representation of a
 * nilpotent algebra with 1-dimensional center; disagreement throws
 * std::logic_error.
 */
bool is_faithful(const Representation& r);

// Parity functor on the module: flips the block split and conjugates every
// image by the block-exchange permutation.  Homomorphism and faithfulness
// are preserved.
Representation flip_module(const Representation& r);

/*
 * Restriction of an even-center representation to the even part: the even
 * basis elements act on the even block of the module through their
 * even-even corners, giving a representation of the even-part Heisenberg
 * Lie algebra.  Reports whether that restriction is faithful and, when it
 * is, whether the even block meets the minimal faithful dimension m+2 of
 * the even-part Heisenberg algebra.
 */
struct EvenRestrictionReport {
    bool is_lie_algebra_rep = false;
    bool faithful = false;
    std::size_t even_module_dim = 0;
    std::size_t min_faithful_dim = 0; // m+2 for the even part of h_{m,n}
    bool bound_holds = true;          // meaningful when faithful
    std::vector<std::string> findings;
};

// Throws std::invalid_argument when the algebra has an odd center.
EvenRestrictionReport restrict_to_even_part(const Representation& r);

} // namespace heisuper

#endif
