#include "heisuper/constructions.hpp"
#include "heisuper/json_io.hpp"
#include "heisuper/rng.hpp"

#include <doctest.h>

using namespace heisuper;

TEST_CASE("scalar encoding is canonical") {
    const GaussRational s(mpq_class(1, 2), mpq_class(-3, 4));
    const nlohmann::json j = scalar_to_json(s);
    CHECK(j["re"] == "1/2");
    CHECK(j["im"] == "-3/4");
    CHECK(scalar_from_json(j) == s);
}

TEST_CASE("scalar round-trip on random values") {
    Rng rng(51);
    for (int t = 0; t < 100; ++t) {
        const GaussRational s = rng.scalar(50);
        CHECK(scalar_from_json(scalar_to_json(s)) == s);
    }
}

TEST_CASE("matrix and subspace round-trips") {
    Rng rng(52);
    const SuperDim d{2, 2};
    SuperMatrix m(d);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            if (rng.coin()) m.at(r, c) = rng.scalar();
    CHECK(matrix_from_json(matrix_to_json(m)) == m);

    std::vector<GradedVector> basis{GradedVector::unit(d, 0), GradedVector::unit(d, 2)};
    const Subspace s(d, basis);
    const Subspace back = subspace_from_json(subspace_to_json(s));
    CHECK(back.dim() == 2);
    CHECK(back.ambient() == d);
    CHECK(back.contains(basis[0]));
}

TEST_CASE("representation file round-trip") {
    const Representation rep = build_pi_even_center(1, 2);
    const nlohmann::json j = representation_to_json(rep);
    const Representation back = representation_from_json(j);
    CHECK(back.module_dim() == rep.module_dim());
    CHECK(back.algebra().dim() == rep.algebra().dim());
    for (std::size_t i = 0; i < rep.algebra().dim(); ++i) {
        CHECK(back.algebra().label(i) == rep.algebra().label(i));
        CHECK(back.image(i) == rep.image(i));
    }
    CHECK(verify_representation(back).pass());
    CHECK(is_faithful(back));
}

TEST_CASE("decoders reject malformed data") {
    CHECK_THROWS_AS(scalar_from_json(nlohmann::json{{"re", "1/2"}}), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json{{"even", 1}, {"odd", 0}, {"entries", 7}}),
                    std::invalid_argument);

    const Representation rep = build_pi_even_center(1, 0);
    nlohmann::json j = representation_to_json(rep);
    j["images"].erase("u1");
    CHECK_THROWS_AS(representation_from_json(j), std::invalid_argument);
}
