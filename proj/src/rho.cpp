#include "heisuper/rho.hpp"

#include "heisuper/heisenberg.hpp"

#include <stdexcept>
#include <utility>

namespace heisuper {

RhoAnalysis rho_analysis(const Representation& r, const GradedVector& v0,
                         std::optional<std::size_t> zeta_value) {
    const LieSuperalgebra& g = r.algebra();
    if (v0.is_zero() || !v0.is_homogeneous())
        throw std::invalid_argument("rho_analysis: v0 must be nonzero homogeneous");
    if ((r.image(g.center_index()) * v0).is_zero())
        throw std::invalid_argument("rho_analysis: z kills v0");

    // Columns of rho are the basis elements acting on v0.
    std::vector<GradedVector> columns;
    columns.reserve(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i) columns.push_back(r.image(i) * v0);

    Subspace a = kernel(columns, g.super_dim());
    Subspace b = Subspace::from_span(r.module_dim(), columns);

    // Greedy graded complement: z first, then coordinate vectors that
    // enlarge the span of a.
    detail::Mat rows;
    for (const auto& v : a.basis()) rows.push_back(v.coords());
    std::vector<GradedVector> prime_basis;
    auto try_insert = [&](const GradedVector& v) {
        detail::Mat trial = rows;
        trial.push_back(v.coords());
        if (detail::reduce(trial).rank() != rows.size() + 1) return false;
        rows.push_back(v.coords());
        prime_basis.push_back(v);
        return true;
    };
    const GradedVector z_unit = GradedVector::unit(g.super_dim(), g.center_index());
    try_insert(z_unit);
    for (std::size_t i = 0; i < g.dim() && rows.size() < g.dim(); ++i) {
        if (i == g.center_index()) continue;
        try_insert(GradedVector::unit(g.super_dim(), i));
    }
    Subspace a_prime(g.super_dim(), std::move(prime_basis));

    RhoAnalysis out{v0,    std::move(a), std::move(b), std::move(a_prime),
                    false, false,        false,        false,
                    false, std::nullopt};

    out.a_abelian_z_free = is_abelian_excluding_center(g, out.a);
    out.direct_sum = out.a.dim() + out.a_prime.dim() == g.dim() &&
                     rows.size() == g.dim() && out.a_prime.contains(z_unit) &&
                     !out.a.contains(z_unit);

    out.a_prime_subalgebra = true;
    for (const auto& x : out.a_prime.basis())
        for (const auto& y : out.a_prime.basis())
            if (!out.a_prime.contains(g.bracket(x, y))) out.a_prime_subalgebra = false;

    std::vector<GradedVector> prime_images;
    for (const auto& x : out.a_prime.basis()) prime_images.push_back(r.act(x, v0));
    out.images_independent = rank(prime_images) == out.a_prime.dim();

    out.rank_nullity = out.a.dim() + out.b.dim() == g.dim();

    if (zeta_value && out.a.dim() == *zeta_value)
        out.v0_not_in_image = !out.b.contains(v0);

    return out;
}

} // namespace heisuper
