#include "heisuper/representation.hpp"

#include "heisuper/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace heisuper {

Representation::Representation(LieSuperalgebra algebra, SuperDim module_dim,
                               std::vector<SuperMatrix> images)
    : algebra_(std::move(algebra)), module_(module_dim), images_(std::move(images)) {
    if (images_.size() != algebra_.dim())
        throw std::invalid_argument("Representation: one image per basis element required");
    for (const auto& m : images_)
        if (!(m.dim() == module_))
            throw std::invalid_argument("Representation: image has wrong module dimension");
}

SuperMatrix Representation::element_image(const GradedVector& x) const {
    if (!(x.dim() == algebra_.super_dim()))
        throw std::invalid_argument("element_image: wrong coordinate dimension");
    SuperMatrix out(module_);
    for (std::size_t i = 0; i < algebra_.dim(); ++i) {
        if (x.at(i).is_zero()) continue;
        SuperMatrix term = images_[i];
        term *= x.at(i);
        out += term;
    }
    return out;
}

GradedVector Representation::act(const GradedVector& x, const GradedVector& v) const {
    return element_image(x) * v;
}

RepReport verify_representation(const Representation& r) {
    RepReport rep;
    const LieSuperalgebra& g = r.algebra();
    const std::size_t d = g.dim();

    rep.parities_ok = true;
    for (std::size_t i = 0; i < d; ++i) {
        if (r.image(i).is_homogeneous_of(g.parity(i))) continue;
        rep.parities_ok = false;
        rep.violations.push_back("image of " + g.label(i) +
                                 " is not homogeneous of the element's parity");
    }
    if (!rep.parities_ok) return rep; // the sign rule below needs homogeneous images

    rep.homomorphism_ok = true;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            SuperMatrix lhs(r.module_dim());
            for (std::size_t k = 0; k < d; ++k) {
                const GaussRational& coeff = g.c(i, j, k);
                if (coeff.is_zero()) continue;
                SuperMatrix term = r.image(k);
                term *= coeff;
                lhs += term;
            }
            SuperMatrix rhs = super_commutator(r.image(i), r.image(j));
            if (!(lhs == rhs)) {
                rep.homomorphism_ok = false;
                rep.violations.push_back("homomorphism identity fails at pair (" + g.label(i) +
                                         ", " + g.label(j) + ")");
            }
        }
    return rep;
}

namespace {

// Columns of x -> image(x) with matrices flattened to coordinate vectors.
std::vector<GradedVector> stacked_image_columns(const Representation& r) {
    const std::size_t n2 = r.module_dim().total() * r.module_dim().total();
    const SuperDim stacked{n2, 0};
    std::vector<GradedVector> columns;
    columns.reserve(r.algebra().dim());
    for (std::size_t i = 0; i < r.algebra().dim(); ++i) {
        GradedVector col(stacked);
        const auto& flat = r.image(i).flat();
        for (std::size_t e = 0; e < n2; ++e) col.at(e) = flat[e];
        columns.push_back(std::move(col));
    }
    return columns;
}

} // namespace

bool is_faithful(const Representation& r) {
    const bool kernel_trivial =
        kernel(stacked_image_columns(r), r.algebra().super_dim()).dim() == 0;
    const bool z_acts = !r.image(r.algebra().center_index()).is_zero();
    if (kernel_trivial != z_acts)
        throw std::logic_error(
            "is_faithful: kernel computation disagrees with the center criterion");
    return kernel_trivial;
}

Representation flip_module(const Representation& r) {
    std::vector<SuperMatrix> images;
    images.reserve(r.images().size());
    for (const auto& m : r.images()) images.push_back(parity_flip(m));
    return Representation(r.algebra(), r.module_dim().flipped(), std::move(images));
}

EvenRestrictionReport restrict_to_even_part(const Representation& r) {
    const LieSuperalgebra& g = r.algebra();
    if (g.parity(g.center_index()) != Parity::even)
        throw std::invalid_argument("restrict_to_even_part: algebra has an odd center");

    EvenRestrictionReport out;
    const std::size_t p = r.module_dim().even;
    out.even_module_dim = p;

    std::vector<std::size_t> even_idx;
    for (std::size_t i = 0; i < g.dim(); ++i)
        if (g.parity(i) == Parity::even) even_idx.push_back(i);
    // even part of h_{m,n} is the Heisenberg Lie algebra on (u_i, v_i, z)
    out.min_faithful_dim = (even_idx.size() - 1) / 2 + 2;

    const SuperDim block_dim{p, 0};
    auto corner = [&](const SuperMatrix& m) {
        SuperMatrix out_block(block_dim);
        for (std::size_t a = 0; a < p; ++a)
            for (std::size_t c = 0; c < p; ++c) out_block.at(a, c) = m.at(a, c);
        return out_block;
    };

    std::vector<SuperMatrix> blocks;
    blocks.reserve(even_idx.size());
    for (std::size_t i : even_idx) blocks.push_back(corner(r.image(i)));

    out.is_lie_algebra_rep = true;
    for (std::size_t a = 0; a < even_idx.size(); ++a)
        for (std::size_t b = 0; b < even_idx.size(); ++b) {
            SuperMatrix lhs(block_dim);
            for (std::size_t cpos = 0; cpos < even_idx.size(); ++cpos) {
                const GaussRational& coeff = g.c(even_idx[a], even_idx[b], even_idx[cpos]);
                if (coeff.is_zero()) continue;
                SuperMatrix term = blocks[cpos];
                term *= coeff;
                lhs += term;
            }
            SuperMatrix rhs = blocks[a] * blocks[b] - blocks[b] * blocks[a];
            if (!(lhs == rhs)) {
                out.is_lie_algebra_rep = false;
                out.findings.push_back("even-block commutator fails at pair (" +
                                       g.label(even_idx[a]) + ", " + g.label(even_idx[b]) + ")");
            }
        }

    // Faithful iff the stacked even-block map has trivial kernel; this must
    // agree with the center acting nontrivially on the even block.
    const SuperDim stacked{p * p, 0};
    std::vector<GradedVector> columns;
    for (const auto& blk : blocks) {
        GradedVector col(stacked);
        for (std::size_t e = 0; e < p * p; ++e) col.at(e) = blk.flat()[e];
        columns.push_back(std::move(col));
    }
    const SuperDim even_coords{even_idx.size(), 0};
    out.faithful = p > 0 && kernel(columns, even_coords).dim() == 0;
    std::size_t z_pos = 0;
    for (std::size_t a = 0; a < even_idx.size(); ++a)
        if (even_idx[a] == g.center_index()) z_pos = a;
    const bool z_acts = p > 0 && !blocks[z_pos].is_zero();
    if (out.is_lie_algebra_rep && out.faithful != z_acts)
        out.findings.push_back("kernel test disagrees with the center criterion");
    if (!out.faithful)
        out.findings.push_back("even restriction is not faithful: center acts trivially"
                               " on the even block");

    out.bound_holds = !out.faithful || p >= out.min_faithful_dim;
    return out;
}

} // namespace heisuper
