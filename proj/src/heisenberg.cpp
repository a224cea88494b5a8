#include "heisuper/heisenberg.hpp"

#include <stdexcept>

namespace heisuper {

void HeisenbergSpec::ensure_valid() const {
    if (valid()) return;
    if (family == Family::even_center)
        throw std::invalid_argument("even-center Heisenberg superalgebra requires m + n >= 1");
    throw std::invalid_argument("odd-center Heisenberg superalgebra requires n >= 1");
}

std::string HeisenbergSpec::str() const {
    if (family == Family::even_center)
        return "h_{" + std::to_string(m) + "," + std::to_string(n) + "}";
    return "h_" + std::to_string(n);
}

LieSuperalgebra make_heisenberg(const HeisenbergSpec& spec) {
    spec.ensure_valid();
    std::vector<BasisElement> basis;
    std::vector<StructureEntry> entries;
    const GaussRational one(1);

    if (spec.family == Family::even_center) {
        const std::size_t m = spec.m, n = spec.n;
        for (std::size_t i = 1; i <= m; ++i)
            basis.push_back({"u" + std::to_string(i), Parity::even});
        for (std::size_t i = 1; i <= m; ++i)
            basis.push_back({"v" + std::to_string(i), Parity::even});
        basis.push_back({"z", Parity::even});
        for (std::size_t j = 1; j <= n; ++j)
            basis.push_back({"w" + std::to_string(j), Parity::odd});
        const std::size_t z = 2 * m;
        for (std::size_t i = 0; i < m; ++i) {
            entries.push_back({i, m + i, z, one});
            entries.push_back({m + i, i, z, -one});
        }
        for (std::size_t j = 0; j < n; ++j)
            entries.push_back({2 * m + 1 + j, 2 * m + 1 + j, z, one});
        return LieSuperalgebra(std::move(basis), z, entries);
    }

    const std::size_t n = spec.n;
    for (std::size_t i = 1; i <= n; ++i)
        basis.push_back({"v" + std::to_string(i), Parity::even});
    basis.push_back({"z", Parity::odd});
    for (std::size_t j = 1; j <= n; ++j)
        basis.push_back({"w" + std::to_string(j), Parity::odd});
    const std::size_t z = n;
    for (std::size_t i = 0; i < n; ++i) {
        entries.push_back({i, n + 1 + i, z, one});
        entries.push_back({n + 1 + i, i, z, -one});
    }
    return LieSuperalgebra(std::move(basis), z, entries);
}

std::size_t zeta(const HeisenbergSpec& spec) {
    spec.ensure_valid();
    return spec.family == Family::even_center ? spec.m + spec.n / 2 : spec.n;
}

Subspace canonical_complement(const LieSuperalgebra& g) {
    std::vector<GradedVector> basis;
    basis.reserve(g.dim() - 1);
    for (std::size_t i = 0; i < g.dim(); ++i)
        if (i != g.center_index()) basis.push_back(GradedVector::unit(g.super_dim(), i));
    return Subspace(g.super_dim(), std::move(basis));
}

std::vector<SuperDim> admissible_witness_targets(const HeisenbergSpec& spec) {
    spec.ensure_valid();
    if (spec.family == Family::even_center)
        return {SuperDim{spec.m, spec.n / 2}};
    std::vector<SuperDim> out;
    for (std::size_t i = 0; i <= spec.n; ++i) out.push_back(SuperDim{i, spec.n - i});
    return out;
}

Subspace abelian_witness(const HeisenbergSpec& spec, SuperDim target) {
    spec.ensure_valid();
    const SuperDim ambient = spec.algebra_super_dim();
    std::vector<GradedVector> basis;

    if (spec.family == Family::even_center) {
        if (!(target == SuperDim{spec.m, spec.n / 2}))
            throw std::invalid_argument("abelian_witness: inadmissible target super-dimension");
        for (std::size_t i = 0; i < spec.m; ++i)
            basis.push_back(GradedVector::unit(ambient, i));
        // w_{2k-1} + i*w_{2k}: each pair self-brackets to z - z = 0.
        const std::size_t w0 = 2 * spec.m + 1;
        for (std::size_t k = 0; 2 * k + 2 <= spec.n; ++k) {
            GradedVector v(ambient);
            v.at(w0 + 2 * k) = GaussRational(1);
            v.at(w0 + 2 * k + 1) = GaussRational::imaginary_unit();
            basis.push_back(std::move(v));
        }
        return Subspace(ambient, std::move(basis));
    }

    if (target.even > spec.n || target.even + target.odd != spec.n)
        throw std::invalid_argument("abelian_witness: inadmissible target super-dimension");
    const std::size_t i = target.even;
    for (std::size_t k = 0; k < i; ++k)
        basis.push_back(GradedVector::unit(ambient, k));
    for (std::size_t l = i; l < spec.n; ++l)
        basis.push_back(GradedVector::unit(ambient, spec.n + 1 + l));
    return Subspace(ambient, std::move(basis));
}

bool is_abelian_excluding_center(const LieSuperalgebra& g, const Subspace& s) {
    for (const auto& x : s.basis())
        for (const auto& y : s.basis())
            if (!g.bracket(x, y).is_zero()) return false;
    return !s.contains(GradedVector::unit(g.super_dim(), g.center_index()));
}

} // namespace heisuper
