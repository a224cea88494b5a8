#include "heisuper/constructions.hpp"
#include "heisuper/representation.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace heisuper;

namespace {
const GaussRational one(1);
const GaussRational half = GaussRational::fraction(1, 2);
const GaussRational gi = GaussRational::imaginary_unit();
}

TEST_CASE("even-center images") {
    const Representation rep = build_pi_even_center(1, 1);
    CHECK(rep.module_dim() == SuperDim{3, 1});

    SuperMatrix expected_w1 = matrix_unit(rep.module_dim(), 4, 3);
    expected_w1 *= half;
    expected_w1 += matrix_unit(rep.module_dim(), 1, 4);
    CHECK(rep.image(*rep.algebra().index_of("w1")) == expected_w1);
    CHECK(rep.image(*rep.algebra().index_of("u1")) == matrix_unit(rep.module_dim(), 1, 2));
    CHECK(rep.image(*rep.algebra().index_of("z")) == matrix_unit(rep.module_dim(), 1, 3));
    CHECK(verify_representation(rep).pass());
    CHECK(is_faithful(rep));
}

TEST_CASE("element images extend linearly") {
    const Representation rep = build_pi_even_center(1, 2);
    GradedVector x(rep.algebra().super_dim());
    x.at(*rep.algebra().index_of("u1")) = one;
    x.at(*rep.algebra().index_of("w1")) = one;
    SuperMatrix expected = matrix_unit(rep.module_dim(), 1, 2);
    SuperMatrix tail = matrix_unit(rep.module_dim(), 4, 3);
    tail *= half;
    expected += tail;
    expected += matrix_unit(rep.module_dim(), 1, 4);
    CHECK(rep.element_image(x) == expected);
}

TEST_CASE("smallest even-center module") {
    const Representation rep = build_pi_even_center(0, 1);
    CHECK(rep.module_dim() == SuperDim{2, 1});
    SuperMatrix expected_w1 = matrix_unit(rep.module_dim(), 3, 2);
    expected_w1 *= half;
    expected_w1 += matrix_unit(rep.module_dim(), 1, 3);
    CHECK(rep.image(*rep.algebra().index_of("w1")) == expected_w1);
    CHECK(verify_representation(rep).pass());
    CHECK(is_faithful(rep));
}

TEST_CASE("flipped even-center images") {
    const Representation rep = build_pi_even_center_flipped(1, 2);
    CHECK(rep.module_dim() == SuperDim{1, 3});
    CHECK(rep.image(*rep.algebra().index_of("z")) == matrix_unit(rep.module_dim(), 2, 3));
    CHECK(verify_representation(rep).pass());
    CHECK(is_faithful(rep));

    const Representation lie_algebra_case = build_pi_even_center_flipped(2, 0);
    CHECK(lie_algebra_case.module_dim() == SuperDim{0, 4});
    CHECK(verify_representation(lie_algebra_case).pass());
    CHECK(is_faithful(lie_algebra_case));

    const Representation square = build_pi_even_center_flipped(1, 1);
    CHECK(verify_representation(square).pass());
    CHECK(is_faithful(square));
}

TEST_CASE("odd-center images") {
    const Representation rep = build_pi_odd_center(2, 1);
    CHECK(rep.module_dim() == SuperDim{2, 2});
    SuperMatrix v2 = matrix_unit(rep.module_dim(), 3, 4);
    v2 *= -one;
    CHECK(rep.image(*rep.algebra().index_of("v2")) == v2);
    CHECK(rep.image(*rep.algebra().index_of("w2")) == matrix_unit(rep.module_dim(), 1, 3));
    CHECK(verify_representation(rep).pass());
    CHECK(is_faithful(rep));

    const Representation classical = build_pi_odd_center(1, 1);
    CHECK(classical.module_dim() == SuperDim{2, 1});
    CHECK(classical.image(*classical.algebra().index_of("v1")) ==
          matrix_unit(classical.module_dim(), 1, 2));

    for (std::size_t r = 0; r <= 3; ++r) {
        const Representation pr = build_pi_odd_center(3, r);
        CHECK(pr.module_dim().total() == 5);
        CHECK(verify_representation(pr).pass());
        CHECK(is_faithful(pr));
    }
    CHECK_THROWS_AS(build_pi_odd_center(2, 3), std::invalid_argument);
}

TEST_CASE("zero representation is verified but unfaithful") {
    const LieSuperalgebra g = make_heisenberg(HeisenbergSpec::odd_center(1));
    const Representation rep = testing::zero_representation(g, SuperDim{2, 1});
    CHECK(verify_representation(rep).pass());
    CHECK(!is_faithful(rep));
}

TEST_CASE("forged representation fails the homomorphism identity") {
    // send z to zero but u1, v1 to matrix units with nonzero commutator
    const LieSuperalgebra g = make_heisenberg(HeisenbergSpec::even_center(1, 0));
    const SuperDim module{3, 0};
    std::vector<SuperMatrix> images(g.dim(), SuperMatrix(module));
    images[*g.index_of("u1")] = matrix_unit(module, 1, 2);
    images[*g.index_of("v1")] = matrix_unit(module, 2, 3);
    const Representation rep(g, module, std::move(images));
    const RepReport check = verify_representation(rep);
    CHECK(check.parities_ok);
    CHECK(!check.homomorphism_ok);
    bool mentions_pair = false;
    for (const auto& v : check.violations)
        mentions_pair = mentions_pair || v.find("u1, v1") != std::string::npos;
    CHECK(mentions_pair);
}

TEST_CASE("parity violations are reported") {
    // u1 is even but its image has an odd matrix entry
    const LieSuperalgebra g = make_heisenberg(HeisenbergSpec::even_center(1, 1));
    const SuperDim module{3, 1};
    std::vector<SuperMatrix> images(g.dim(), SuperMatrix(module));
    images[*g.index_of("u1")] = matrix_unit(module, 1, 4);
    const RepReport check = verify_representation(Representation(g, module, std::move(images)));
    CHECK(!check.parities_ok);
    CHECK(!check.pass());
    CHECK(!check.violations.empty());
}

TEST_CASE("faithful iff the center acts nontrivially") {
    Rng rng(31);
    for (const auto& spec :
         {HeisenbergSpec::even_center(1, 2), HeisenbergSpec::odd_center(2)}) {
        for (const auto& rep : testing::verified_degenerations(spec, rng)) {
            CHECK(verify_representation(rep).pass());
            const bool z_acts = !rep.image(rep.algebra().center_index()).is_zero();
            CHECK(is_faithful(rep) == z_acts);
        }
    }
}

TEST_CASE("the center image is a nilpotent endomorphism on every construction") {
    for (const auto& spec :
         {HeisenbergSpec::even_center(2, 3), HeisenbergSpec::odd_center(2)}) {
        for (const auto& rep : testing::constructed_reps(spec)) {
            const SuperMatrix& z = rep.image(rep.algebra().center_index());
            CHECK((z * z).is_zero());
        }
    }
}

TEST_CASE("module flip preserves verification and faithfulness") {
    const Representation rep = build_pi_even_center(1, 2);
    CHECK(rep.module_dim() == SuperDim{3, 1});
    const Representation flipped = flip_module(rep);
    CHECK(flipped.module_dim() == SuperDim{1, 3});
    CHECK(verify_representation(flipped).pass());
    CHECK(is_faithful(flipped));
    CHECK(flipped.module_dim().even == rep.module_dim().odd);

    const Representation twice = flip_module(flipped);
    CHECK(twice.module_dim() == rep.module_dim());
    for (std::size_t i = 0; i < rep.algebra().dim(); ++i) CHECK(twice.image(i) == rep.image(i));
}

TEST_CASE("even-part restriction") {
    const Representation rep = build_pi_even_center(1, 2);
    const EvenRestrictionReport r = restrict_to_even_part(rep);
    CHECK(r.is_lie_algebra_rep);
    CHECK(r.faithful);
    CHECK(r.even_module_dim == 3);
    CHECK(r.min_faithful_dim == 3);
    CHECK(r.bound_holds);

    // after the module flip the center acts only on the odd block, so the
    // even restriction loses faithfulness
    const EvenRestrictionReport f = restrict_to_even_part(flip_module(rep));
    CHECK(f.is_lie_algebra_rep);
    CHECK(!f.faithful);

    const EvenRestrictionReport small = restrict_to_even_part(build_pi_even_center(0, 1));
    CHECK(small.min_faithful_dim == 2);
    CHECK(small.faithful);
    CHECK(small.bound_holds);

    CHECK_THROWS_AS(restrict_to_even_part(build_pi_odd_center(2, 1)), std::invalid_argument);
}
