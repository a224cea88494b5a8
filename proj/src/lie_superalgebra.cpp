#include "heisuper/lie_superalgebra.hpp"

#include <sstream>
#include <stdexcept>

namespace heisuper {

LieSuperalgebra::LieSuperalgebra(std::vector<BasisElement> basis, std::size_t center_index,
                                 const std::vector<StructureEntry>& entries)
    : basis_(std::move(basis)), center_index_(center_index) {
    const std::size_t d = basis_.size();
    if (d == 0) throw std::invalid_argument("LieSuperalgebra: empty basis");
    if (center_index_ >= d) throw std::invalid_argument("LieSuperalgebra: center index out of range");

    bool seen_odd = false;
    for (const auto& b : basis_) {
        if (b.parity == Parity::odd)
            seen_odd = true;
        else if (seen_odd)
            throw std::invalid_argument("LieSuperalgebra: basis must be even-block-first");
        (b.parity == Parity::even ? super_dim_.even : super_dim_.odd) += 1;
    }

    c_.assign(d * d * d, GaussRational(0));
    for (const auto& e : entries) {
        if (e.i >= d || e.j >= d || e.k >= d)
            throw std::invalid_argument("LieSuperalgebra: structure entry index out of range");
        c_[(e.i * d + e.j) * d + e.k] += e.coeff;
    }

    sparse_.resize(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (!c(i, j, k).is_zero()) sparse_[i * d + j].emplace_back(k, c(i, j, k));
}

std::optional<std::size_t> LieSuperalgebra::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].label == label) return i;
    return std::nullopt;
}

GradedVector LieSuperalgebra::bracket_basis(std::size_t i, std::size_t j) const {
    GradedVector out(super_dim_);
    for (const auto& [k, coeff] : sparse_[i * dim() + j]) out.at(k) += coeff;
    return out;
}

GradedVector LieSuperalgebra::bracket(const GradedVector& x, const GradedVector& y) const {
    if (!(x.dim() == super_dim_) || !(y.dim() == super_dim_))
        throw std::invalid_argument("bracket: dimension mismatch");
    GradedVector out(super_dim_);
    const std::size_t d = dim();
    for (std::size_t i = 0; i < d; ++i) {
        if (x.at(i).is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (y.at(j).is_zero()) continue;
            const GaussRational xy = x.at(i) * y.at(j);
            for (const auto& [k, coeff] : sparse_[i * d + j]) out.at(k) += xy * coeff;
        }
    }
    return out;
}

std::vector<StructureEntry> LieSuperalgebra::structure_entries() const {
    std::vector<StructureEntry> out;
    const std::size_t d = dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [k, coeff] : sparse_[i * d + j])
                out.push_back(StructureEntry{i, j, k, coeff});
    return out;
}

namespace {

std::string triple_str(const LieSuperalgebra& g, std::size_t i, std::size_t j) {
    return "[" + g.label(i) + ", " + g.label(j) + "]";
}

} // namespace

AxiomReport check_axioms(const LieSuperalgebra& g) {
    AxiomReport rep;
    const std::size_t d = g.dim();

    rep.skew_symmetric = true;
    for (std::size_t i = 0; i < d && rep.skew_symmetric; ++i)
        for (std::size_t j = 0; j < d && rep.skew_symmetric; ++j) {
            const int sign = koszul_sign(g.parity(i), g.parity(j));
            for (std::size_t k = 0; k < d; ++k) {
                GaussRational expect = sign < 0 ? g.c(j, i, k) : -g.c(j, i, k);
                if (g.c(i, j, k) != expect) {
                    rep.skew_symmetric = false;
                    rep.findings.push_back("super skew-symmetry fails at " + triple_str(g, i, j) +
                                           " coordinate " + g.label(k));
                    break;
                }
            }
        }

    rep.bracket_parity = true;
    for (std::size_t i = 0; i < d && rep.bracket_parity; ++i)
        for (std::size_t j = 0; j < d && rep.bracket_parity; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                if (g.c(i, j, k).is_zero()) continue;
                if (g.parity(k) != parity_sum(g.parity(i), g.parity(j))) {
                    rep.bracket_parity = false;
                    rep.findings.push_back("bracket parity fails at " + triple_str(g, i, j) +
                                           " coordinate " + g.label(k));
                    break;
                }
            }

    // (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] = 0
    rep.jacobi = true;
    for (std::size_t i = 0; i < d && rep.jacobi; ++i)
        for (std::size_t j = 0; j < d && rep.jacobi; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                GradedVector acc(g.super_dim());
                const struct {
                    std::size_t a, b, c;
                    int sign;
                } terms[3] = {
                    {i, j, k, koszul_sign(g.parity(i), g.parity(k))},
                    {j, k, i, koszul_sign(g.parity(j), g.parity(i))},
                    {k, i, j, koszul_sign(g.parity(k), g.parity(j))},
                };
                for (const auto& t : terms) {
                    GradedVector inner = g.bracket_basis(t.b, t.c);
                    GradedVector outer = g.bracket(GradedVector::unit(g.super_dim(), t.a), inner);
                    if (t.sign < 0)
                        acc -= outer;
                    else
                        acc += outer;
                }
                if (!acc.is_zero()) {
                    rep.jacobi = false;
                    rep.findings.push_back("super Jacobi fails at (" + g.label(i) + ", " +
                                           g.label(j) + ", " + g.label(k) + ")");
                    break;
                }
            }

    const std::size_t z = g.center_index();
    rep.center_element_central = true;
    for (std::size_t j = 0; j < d; ++j) {
        if (g.bracket_basis(z, j).is_zero() && g.bracket_basis(j, z).is_zero()) continue;
        rep.center_element_central = false;
        rep.findings.push_back("designated center element " + g.label(z) +
                               " does not commute with " + g.label(j));
        break;
    }

    // Center = kernel of x -> ([x, b_1], ..., [x, b_d]) stacked.
    {
        std::vector<GradedVector> columns;
        columns.reserve(d);
        const SuperDim stacked{d * d, 0};
        for (std::size_t i = 0; i < d; ++i) {
            GradedVector col(stacked);
            for (std::size_t j = 0; j < d; ++j) {
                GradedVector br = g.bracket_basis(i, j);
                for (std::size_t k = 0; k < d; ++k) col.at(j * d + k) = br.at(k);
            }
            columns.push_back(std::move(col));
        }
        Subspace center = kernel(columns, g.super_dim());
        const bool z_in = center.contains(GradedVector::unit(g.super_dim(), z));
        rep.center_is_line = center.dim() == 1 && z_in;
        if (!rep.center_is_line) {
            std::ostringstream os;
            os << "center has dimension " << center.dim();
            if (!z_in) os << " and does not contain " << g.label(z);
            rep.findings.push_back(os.str());
        }
    }

    rep.two_step_nilpotent = true;
    for (std::size_t i = 0; i < d && rep.two_step_nilpotent; ++i)
        for (std::size_t j = 0; j < d && rep.two_step_nilpotent; ++j) {
            GradedVector inner = g.bracket_basis(i, j);
            if (inner.is_zero()) continue;
            for (std::size_t k = 0; k < d; ++k) {
                if (!g.bracket(GradedVector::unit(g.super_dim(), k), inner).is_zero()) {
                    rep.two_step_nilpotent = false;
                    rep.findings.push_back("[" + g.label(k) + ", " + triple_str(g, i, j) +
                                           "] is nonzero");
                    break;
                }
            }
        }

    return rep;
}

} // namespace heisuper
