#include "heisuper/b_form.hpp"
#include "heisuper/heisenberg.hpp"

#include <doctest.h>

using namespace heisuper;

namespace {
const GaussRational one(1);
const GaussRational gi = GaussRational::imaginary_unit();
}

TEST_CASE("gram matrices of the canonical complements") {
    // h_{1,0}: complement (u1, v1), skew pairing
    {
        const LieSuperalgebra g = make_heisenberg(HeisenbergSpec::even_center(1, 0));
        const BForm b = b_form(g, canonical_complement(g));
        CHECK(b.gram()[0][0] == GaussRational(0));
        CHECK(b.gram()[0][1] == one);
        CHECK(b.gram()[1][0] == -one);
        CHECK(b.gram()[1][1] == GaussRational(0));
    }
    // h_1: complement (v1, w1); the defining relation [x,y] = B(x,y) z gives
    // B(v1,w1) = 1 and B(w1,v1) = -1, the pairing is skew across the blocks
    {
        const LieSuperalgebra g = make_heisenberg(HeisenbergSpec::odd_center(1));
        const BForm b = b_form(g, canonical_complement(g));
        CHECK(b.form_parity() == Parity::odd);
        CHECK(b.gram()[0][0] == GaussRational(0));
        CHECK(b.gram()[0][1] == one);
        CHECK(b.gram()[1][0] == -one);
        CHECK(b.gram()[1][1] == GaussRational(0));
    }
    // h_{0,2}: complement (w1, w2), diagonal pairing
    {
        const LieSuperalgebra g = make_heisenberg(HeisenbergSpec::even_center(0, 2));
        const BForm b = b_form(g, canonical_complement(g));
        CHECK(b.gram()[0][0] == one);
        CHECK(b.gram()[1][1] == one);
        CHECK(b.gram()[0][1] == GaussRational(0));
        CHECK(b.gram()[1][0] == GaussRational(0));
    }
}

TEST_CASE("complement preconditions") {
    const LieSuperalgebra g = make_heisenberg(HeisenbergSpec::even_center(1, 0));
    const SuperDim d = g.super_dim();
    // too small
    CHECK_THROWS_AS(b_form(g, Subspace(d, {GradedVector::unit(d, 0)})), std::invalid_argument);
    // contains z
    CHECK_THROWS_AS(b_form(g, Subspace(d, {GradedVector::unit(d, 0), GradedVector::unit(d, 2)})),
                    std::invalid_argument);
}

TEST_CASE("isotropic subspaces") {
    {
        const LieSuperalgebra g = make_heisenberg(HeisenbergSpec::even_center(1, 0));
        const BForm b = b_form(g, canonical_complement(g));
        const SuperDim d = g.super_dim();
        CHECK(is_isotropic(b, Subspace(d, {GradedVector::unit(d, 0)})));
        CHECK(!is_isotropic(b, Subspace(d, {GradedVector::unit(d, 0), GradedVector::unit(d, 1)})));
        // z is outside the complement
        CHECK_THROWS_AS(is_isotropic(b, Subspace(d, {GradedVector::unit(d, 2)})),
                        std::invalid_argument);
    }
    {
        const LieSuperalgebra g = make_heisenberg(HeisenbergSpec::even_center(0, 2));
        const BForm b = b_form(g, canonical_complement(g));
        const SuperDim d = g.super_dim();
        GradedVector pair(d);
        pair.at(1) = one; // w1
        pair.at(2) = gi;  // + i w2
        CHECK(is_isotropic(b, Subspace(d, {pair})));
    }
}

TEST_CASE("random isotropic subspaces respect the dimension bounds") {
    Rng rng(101);
    const std::vector<HeisenbergSpec> specs{
        HeisenbergSpec::even_center(2, 3), HeisenbergSpec::even_center(0, 4),
        HeisenbergSpec::even_center(3, 0), HeisenbergSpec::odd_center(3)};
    for (const auto& spec : specs) {
        const LieSuperalgebra g = make_heisenberg(spec);
        const BForm b = b_form(g, canonical_complement(g));
        std::size_t max_seen = 0;
        for (int t = 0; t < 60; ++t) {
            const IsotropicSample s = random_isotropic_subspace(b, rng);
            CHECK(is_isotropic(b, s.subspace));
            CHECK(s.subspace.dim() <= (spec.dim() - 1) / 2);
            CHECK(s.subspace.dim() == s.even_dim + s.odd_dim);
            if (spec.family == Family::even_center) {
                CHECK(s.even_dim <= spec.m);
                CHECK(s.odd_dim <= spec.n / 2);
            }
            max_seen = std::max(max_seen, s.subspace.dim());
        }
        // the sampler actually reaches nontrivial subspaces
        CHECK(max_seen >= 1);
    }
}
