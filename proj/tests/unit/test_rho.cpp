#include "heisuper/constructions.hpp"
#include "heisuper/rho.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace heisuper;

TEST_CASE("evaluation map at the canonical vector") {
    const Representation rep = build_pi_even_center(1, 1);
    const GradedVector v0 = GradedVector::unit(rep.module_dim(), 2); // third even coordinate
    CHECK(canonical_v0(rep) == v0);
    CHECK(rep.image(rep.algebra().center_index()) * v0 ==
          GradedVector::unit(rep.module_dim(), 0));

    const RhoAnalysis an = rho_analysis(rep, v0, zeta(HeisenbergSpec::even_center(1, 1)));
    CHECK(an.a_abelian_z_free);
    CHECK(an.direct_sum);
    CHECK(an.a_prime_subalgebra);
    CHECK(an.images_independent);
    CHECK(an.rank_nullity);
    CHECK(an.a.dim() == 1); // span{u1}, the odd pair needs n >= 2
    REQUIRE(an.v0_not_in_image.has_value());
    CHECK(*an.v0_not_in_image);
    CHECK(an.certified());
}

TEST_CASE("kernel picks up the isotropic odd pairs") {
    const Representation rep = build_pi_even_center(1, 2);
    const RhoAnalysis an = rho_analysis(rep, canonical_v0(rep), 2);
    CHECK(an.a.dim() == 2); // u1 and w1 + i w2
    CHECK(an.a.is_graded());
    const GradedVector u1 = GradedVector::unit(rep.algebra().super_dim(), 0);
    CHECK(an.a.contains(u1));
    GradedVector pair(rep.algebra().super_dim());
    pair.at(3) = GaussRational(1);
    pair.at(4) = GaussRational::imaginary_unit();
    CHECK(an.a.contains(pair));
    CHECK(an.certified());
}

TEST_CASE("precondition violations") {
    const Representation rep = build_pi_even_center(1, 1);
    // z = e_{1,3} kills the first coordinate vector
    CHECK_THROWS_AS(rho_analysis(rep, GradedVector::unit(rep.module_dim(), 0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(rho_analysis(rep, GradedVector(rep.module_dim())), std::invalid_argument);
    GradedVector mixed(rep.module_dim());
    mixed.at(2) = GaussRational(1);
    mixed.at(3) = GaussRational(1);
    CHECK_THROWS_AS(rho_analysis(rep, mixed), std::invalid_argument);
}

TEST_CASE("rank-nullity for the odd-center family") {
    const Representation rep = build_pi_odd_center(2, 1);
    const GradedVector v0 = GradedVector::unit(rep.module_dim(), 3); // last odd coordinate
    const RhoAnalysis an = rho_analysis(rep, v0);
    CHECK(an.a.dim() + an.b.dim() == rep.algebra().dim());
    CHECK(an.rank_nullity);
    CHECK(!an.v0_not_in_image.has_value()); // no zeta supplied
}

TEST_CASE("analysis certifies for random admissible module vectors") {
    Rng rng(61);
    for (const auto& spec : {HeisenbergSpec::even_center(1, 3), HeisenbergSpec::even_center(2, 2),
                             HeisenbergSpec::odd_center(3)}) {
        for (const auto& rep : testing::constructed_reps(spec)) {
            const SuperMatrix& z = rep.image(rep.algebra().center_index());
            for (int t = 0; t < 5; ++t) {
                // homogeneous v0 with z.v0 != 0, found by rejection
                GradedVector v0(rep.module_dim());
                do {
                    const Parity p = rng.coin() ? Parity::even : Parity::odd;
                    v0 = GradedVector(rep.module_dim());
                    for (std::size_t c = 0; c < rep.module_dim().total(); ++c)
                        if (rep.module_dim().parity_of(c) == p && rng.coin())
                            v0.at(c) = rng.scalar(3);
                } while ((z * v0).is_zero());
                const RhoAnalysis an = rho_analysis(rep, v0, zeta(spec));
                CHECK(an.a_abelian_z_free);
                CHECK(an.direct_sum);
                CHECK(an.a_prime_subalgebra);
                CHECK(an.images_independent);
                CHECK(an.rank_nullity);
                CHECK(an.certified());
            }
        }
    }
}

TEST_CASE("canonical analysis certifies across the constructions") {
    for (const auto& spec : {HeisenbergSpec::even_center(2, 3), HeisenbergSpec::odd_center(3)}) {
        for (const auto& rep : testing::constructed_reps(spec)) {
            const RhoAnalysis an = rho_analysis(rep, canonical_v0(rep), zeta(spec));
            CHECK(an.certified());
            CHECK(an.a.dim() == zeta(spec));
            REQUIRE(an.v0_not_in_image.has_value());
            CHECK(*an.v0_not_in_image);
        }
    }
}
