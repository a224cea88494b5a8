#include "heisuper/gauss_rational.hpp"
#include "heisuper/rng.hpp"

#include <doctest.h>

using namespace heisuper;

namespace {
const GaussRational i = GaussRational::imaginary_unit();
const GaussRational half = GaussRational::fraction(1, 2);
}

TEST_CASE("basic field arithmetic") {
    CHECK(half * i == GaussRational(mpq_class(0), mpq_class(1, 2)));
    CHECK(i * i == GaussRational(-1));
    CHECK(GaussRational(1) - i + (GaussRational(1) + i) == GaussRational(2));
    CHECK((GaussRational(1) - i) + (GaussRational(1) + i) == GaussRational(2));
    CHECK(-(half * i) + half * i == GaussRational(0));
}

TEST_CASE("inverses") {
    CHECK(i.inv() == -i);
    CHECK(GaussRational(2).inv() == half);

    // 1/(1+i) = (1-i)/2, cross-checked by multiplying back.
    const GaussRational a = GaussRational(1) + i;
    const GaussRational expected(mpq_class(1, 2), mpq_class(-1, 2));
    CHECK(a.inv() == expected);
    CHECK(a * a.inv() == GaussRational(1));

    CHECK_THROWS_AS(GaussRational(0).inv(), std::domain_error);
}

TEST_CASE("field axioms on random triples") {
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        const GaussRational a = rng.scalar();
        const GaussRational b = rng.scalar();
        const GaussRational c = rng.scalar();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("inv is a two-sided inverse on random nonzero values") {
    Rng rng(12);
    for (int t = 0; t < 100; ++t) {
        const GaussRational a = rng.nonzero_scalar();
        CHECK(a * a.inv() == GaussRational(1));
        CHECK(a.inv() * a == GaussRational(1));
    }
}

TEST_CASE("canonical fraction strings") {
    // construction and parsing both reduce to lowest terms with a positive
    // denominator
    CHECK(GaussRational(mpq_class(2, 4), mpq_class(-3, -6)) ==
          GaussRational(mpq_class(1, 2), mpq_class(1, 2)));
    const GaussRational parsed = GaussRational::parse("2/4", "-3/-6");
    CHECK(parsed.re_str() == "1/2");
    CHECK(parsed.im_str() == "1/2");
    CHECK(GaussRational(-3).re_str() == "-3/1");
    CHECK(GaussRational::parse("7", "0").re_str() == "7/1");
    CHECK_THROWS_AS(GaussRational::parse("junk", "0"), std::invalid_argument);
    CHECK_THROWS_AS(GaussRational::parse("1/0", "0"), std::invalid_argument);
}

TEST_CASE("display strings") {
    CHECK(GaussRational(0).str() == "0");
    CHECK(i.str() == "i");
    CHECK((-i).str() == "-i");
    CHECK((half * i).str() == "1/2i");
    CHECK((GaussRational(2) - half * i).str() == "2-1/2i");
}
