#include "heisuper/constructions.hpp"
#include "heisuper/linalg.hpp"
#include "heisuper/rho.hpp"
#include "heisuper/rng.hpp"
#include "heisuper/super_matrix.hpp"

#include <doctest.h>

#include <vector>

using namespace heisuper;

namespace {

const GaussRational one(1);
const GaussRational gi = GaussRational::imaginary_unit();

SuperMatrix random_homogeneous_matrix(SuperDim dim, Parity p, Rng& rng) {
    SuperMatrix m(dim);
    for (std::size_t r = 0; r < dim.total(); ++r)
        for (std::size_t c = 0; c < dim.total(); ++c)
            if (parity_sum(dim.parity_of(r), dim.parity_of(c)) == p && rng.coin())
                m.at(r, c) = rng.scalar(3);
    return m;
}

std::vector<GradedVector> stacked_columns(const Representation& rep) {
    const std::size_t n2 = rep.module_dim().total() * rep.module_dim().total();
    std::vector<GradedVector> cols;
    for (std::size_t i = 0; i < rep.algebra().dim(); ++i) {
        GradedVector col(SuperDim{n2, 0});
        for (std::size_t e = 0; e < n2; ++e) col.at(e) = rep.image(i).flat()[e];
        cols.push_back(std::move(col));
    }
    return cols;
}

} // namespace

TEST_CASE("matrix units and their parities") {
    const SuperDim d31{3, 1};
    const SuperMatrix z = matrix_unit(d31, 1, 3);
    CHECK(z.at(0, 2) == one);
    CHECK(z.homogeneous_parity() == Parity::even);

    CHECK(matrix_unit(SuperDim{1, 1}, 1, 2).homogeneous_parity() == Parity::odd);
    CHECK(matrix_unit(SuperDim{2, 0}, 2, 1).homogeneous_parity() == Parity::even);
    CHECK_THROWS_AS(matrix_unit(d31, 0, 1), std::out_of_range);
    CHECK_THROWS_AS(matrix_unit(d31, 1, 5), std::out_of_range);
}

TEST_CASE("graded commutator of matrix units") {
    const SuperDim d{3, 1};
    CHECK(super_commutator(matrix_unit(d, 1, 2), matrix_unit(d, 2, 3)) == matrix_unit(d, 1, 3));

    // odd element squaring to the center image: x = 1/2 e_{4,3} + e_{1,4}
    SuperMatrix x = matrix_unit(d, 4, 3);
    x *= GaussRational::fraction(1, 2);
    x += matrix_unit(d, 1, 4);
    CHECK(x.homogeneous_parity() == Parity::odd);
    CHECK(super_commutator(x, x) == matrix_unit(d, 1, 3));

    CHECK(super_commutator(matrix_unit(d, 1, 2), SuperMatrix(d)) == SuperMatrix(d));

    SuperMatrix mixed = matrix_unit(d, 1, 2) + matrix_unit(d, 1, 4);
    CHECK_THROWS_AS(super_commutator(mixed, x), std::invalid_argument);
    CHECK_THROWS_AS(super_commutator(matrix_unit(d, 1, 2), matrix_unit(SuperDim{2, 2}, 1, 2)),
                    std::invalid_argument);
}

TEST_CASE("kernel of the stacked action map detects faithfulness") {
    const Representation rep = build_pi_even_center(1, 1);
    CHECK(kernel(stacked_columns(rep), rep.algebra().super_dim()).dim() == 0);
}

TEST_CASE("kernel of degenerate column lists") {
    const SuperDim domain{3, 0};
    const SuperDim codomain{2, 0};
    std::vector<GradedVector> zeros(3, GradedVector(codomain));
    CHECK(kernel(zeros, domain).dim() == 3);

    const SuperDim d3{3, 0};
    std::vector<GradedVector> id_cols;
    for (std::size_t k = 0; k < 3; ++k) id_cols.push_back(GradedVector::unit(d3, k));
    CHECK(kernel(id_cols, d3).dim() == 0);
}

TEST_CASE("rank") {
    const SuperDim d{3, 0};
    const GradedVector e1 = GradedVector::unit(d, 0);
    const GradedVector e2 = GradedVector::unit(d, 1);
    CHECK(rank({e1, e2, e1 + e2}) == 2);
    CHECK(rank({}) == 0);
}

TEST_CASE("action images of a graded complement basis plus v0 span the module") {
    // the evaluation-map image vectors together with v0 reach the full
    // minimal module dimension
    const Representation rep = build_pi_even_center(1, 2);
    const GradedVector v0 = GradedVector::unit(rep.module_dim(), 2); // last even coordinate
    const RhoAnalysis an = rho_analysis(rep, v0);
    std::vector<GradedVector> vectors{v0};
    for (const auto& x : an.a_prime.basis()) vectors.push_back(rep.act(x, v0));
    CHECK(rank(vectors) == 4);
}

TEST_CASE("parity flip") {
    const SuperDim d{3, 1};
    CHECK(parity_flip(d) == SuperDim{1, 3});

    CHECK(parity_flip(matrix_unit(d, 1, 3)) == matrix_unit(SuperDim{1, 3}, 2, 4));
    CHECK(parity_flip(parity_flip(matrix_unit(d, 2, 4))) == matrix_unit(d, 2, 4));

    GradedVector v(d);
    v.at(0) = one;
    v.at(3) = gi;
    CHECK(parity_flip(parity_flip(v)) == v);
    CHECK(parity_flip(v).at(0) == gi);

    // flip acts by conjugation with the block-exchange permutation
    const SuperDim f = d.flipped();
    SuperMatrix p(d); // P[new][old] = 1, odd block first
    p.at(0, 3) = one;
    p.at(1, 0) = one;
    p.at(2, 1) = one;
    p.at(3, 2) = one;
    Rng rng(5);
    for (int t = 0; t < 10; ++t) {
        SuperMatrix m = random_homogeneous_matrix(d, t % 2 ? Parity::odd : Parity::even, rng);
        SuperMatrix conj = p * SuperMatrix(m) * inverse(p);
        const SuperMatrix flipped = parity_flip(m);
        bool equal_entries = true;
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c)
                equal_entries = equal_entries && conj.at(r, c) == flipped.at(r, c);
        CHECK(equal_entries);
        CHECK((flipped.dim() == f));
    }
}

TEST_CASE("graded commutator properties on random homogeneous matrices") {
    Rng rng(7);
    const SuperDim d{2, 2};
    for (int t = 0; t < 50; ++t) {
        const SuperMatrix x = random_homogeneous_matrix(d, Parity::odd, rng);
        // [x,x] = 2 x^2 for odd x
        SuperMatrix sq = x * x;
        sq *= GaussRational(2);
        CHECK(super_commutator(x, x) == sq);
    }
    for (int t = 0; t < 50; ++t) {
        const Parity px = rng.coin() ? Parity::odd : Parity::even;
        const Parity py = rng.coin() ? Parity::odd : Parity::even;
        const SuperMatrix x = random_homogeneous_matrix(d, px, rng);
        const SuperMatrix y = random_homogeneous_matrix(d, py, rng);
        const SuperMatrix br = super_commutator(x, y);
        CHECK(br.is_homogeneous_of(parity_sum(px, py)));
        // the flip respects the bracket
        CHECK(parity_flip(br) == super_commutator(parity_flip(x), parity_flip(y)));
    }
}

TEST_CASE("kernel dimension + rank = columns on random exact matrices") {
    Rng rng(9);
    for (int t = 0; t < 30; ++t) {
        const std::size_t rows = std::size_t(rng.integer(1, 5));
        const std::size_t cols = std::size_t(rng.integer(1, 5));
        const SuperDim codomain{rows, 0};
        const SuperDim domain{cols, 0};
        std::vector<GradedVector> columns;
        for (std::size_t j = 0; j < cols; ++j) {
            GradedVector col(codomain);
            for (std::size_t r = 0; r < rows; ++r)
                if (rng.coin()) col.at(r) = rng.scalar(4);
            columns.push_back(std::move(col));
        }
        CHECK(kernel(columns, domain).dim() + rank(columns) == cols);
    }
}

TEST_CASE("subspace invariants") {
    const SuperDim d{2, 1};
    const GradedVector e1 = GradedVector::unit(d, 0);
    const GradedVector e2 = GradedVector::unit(d, 1);
    CHECK_THROWS_AS(Subspace(d, {e1, e1}), std::invalid_argument);

    const Subspace s = Subspace::from_span(d, {e1, e2, e1 + e2});
    CHECK(s.dim() == 2);
    CHECK(s.contains(e1 - e2));
    CHECK(!s.contains(GradedVector::unit(d, 2)));
    CHECK(s.is_graded());
    CHECK(s.super_dim() == SuperDim{2, 0});

    GradedVector mixed(d);
    mixed.at(0) = one;
    mixed.at(2) = one;
    const Subspace t = Subspace::from_span(d, {mixed});
    CHECK(!t.is_graded());
}
