#include <doctest.h>

#include "support.hpp"

using namespace mfam;
using namespace mfam::testing;

namespace {

RingDescriptor small_zc() {
    std::vector<ParameterVariable> vars;
    vars.push_back(ParameterVariable::marked(M("x2*x1"), M("x1^2")));
    vars.push_back(ParameterVariable::marked(M("x2*x1"), M("x2*x0")));
    vars.push_back(ParameterVariable::symbol("t"));
    return RingDescriptor::ZC(std::make_shared<ParameterSet>(std::move(vars)));
}

RingElement random_element(Rng& rng, const RingDescriptor& ring) {
    if (ring.kind() == RingKind::Rationals) {
        mpq_class q{rng.range(-20, 20), rng.range(1, 9)};
        q.canonicalize();
        return RingElement::rational(ring, q);
    }
    if (ring.kind() != RingKind::ParameterPolynomials)
        return RingElement::integer(ring, rng.range(-50, 50));
    RingElement e = RingElement::zero(ring);
    unsigned terms = rng.below(4);
    for (unsigned i = 0; i < terms; ++i) {
        RingElement term = RingElement::integer(ring, rng.range(-5, 5));
        unsigned factors = rng.below(3);
        for (unsigned k = 0; k < factors; ++k)
            term = term * RingElement::parameter(ring, rng.below(static_cast<unsigned>(ring.params()->size())));
        e += term;
    }
    return e;
}

}  // namespace

TEST_SUITE_BEGIN("ring");

TEST_CASE("descriptor parsing and equality") {
    CHECK(RingDescriptor::parse("ZZ").kind() == RingKind::Integers);
    CHECK(RingDescriptor::parse("QQ").kind() == RingKind::Rationals);
    CHECK(RingDescriptor::parse("ZZ/5").modulus() == 5);
    CHECK_THROWS_AS(RingDescriptor::parse("ZZ/6"), std::invalid_argument);
    CHECK_THROWS_AS(RingDescriptor::parse("GF(4)"), std::invalid_argument);
    CHECK(RingDescriptor::ZZ() == RingDescriptor::ZZ());
    CHECK(RingDescriptor::Zp(5) != RingDescriptor::Zp(7));
    CHECK(RingDescriptor::ZZ().str() == "ZZ");
    CHECK(RingDescriptor::Zp(5).str() == "ZZ/5");
}

TEST_CASE("basic arithmetic examples") {
    RingDescriptor zc = small_zc();
    RingElement c1 = RingElement::parameter(zc, 0);
    RingElement two = RingElement::integer(zc, 2);
    CHECK((c1 + two) * (c1 - two) == c1 * c1 - RingElement::integer(zc, 4));

    RingDescriptor z5 = RingDescriptor::Zp(5);
    CHECK(RingElement::integer(z5, 3) * RingElement::integer(z5, 4) ==
          RingElement::integer(z5, 2));
    CHECK(RingElement::integer(z5, 10).is_zero());
    CHECK((c1 - c1).is_zero());
}

TEST_CASE("ring axioms on random elements") {
    Rng rng(0x5eed20);
    for (const RingDescriptor& ring :
         {RingDescriptor::ZZ(), RingDescriptor::QQ(), RingDescriptor::Zp(5), small_zc()}) {
        for (int iter = 0; iter < 80; ++iter) {
            RingElement a = random_element(rng, ring);
            RingElement b = random_element(rng, ring);
            RingElement c = random_element(rng, ring);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + (-a)).is_zero());
            CHECK(a * RingElement::one(ring) == a);
        }
    }
}

TEST_CASE("canonical form is idempotent and zero-free") {
    Rng rng(0x5eed21);
    RingDescriptor zc = small_zc();
    for (int iter = 0; iter < 100; ++iter) {
        RingElement a = random_element(rng, zc);
        RingElement b = random_element(rng, zc);
        RingElement sum = a + b - b;
        CHECK(sum == a);
        for (const auto& [exps, coeff] : sum.terms()) CHECK(coeff != 0);
        // Re-parsing the printed form reproduces the element.
        if (!sum.is_zero()) CHECK(RingElement::parse(zc, sum.str()) == sum);
    }
}

TEST_CASE("field inverses") {
    RingDescriptor z7 = RingDescriptor::Zp(7);
    for (long v = 1; v < 7; ++v) {
        RingElement e = RingElement::integer(z7, v);
        CHECK((e * e.inverse()).is_one());
    }
    RingDescriptor qq = RingDescriptor::QQ();
    RingElement q = RingElement::rational(qq, mpq_class(-3, 4));
    CHECK((q * q.inverse()).is_one());
    CHECK_THROWS_AS(RingElement::zero(qq).inverse(), std::invalid_argument);
    CHECK_THROWS_AS(RingElement::integer(RingDescriptor::ZZ(), 2).inverse(),
                    std::invalid_argument);
}

TEST_CASE("homomorphisms commute with arithmetic") {
    Rng rng(0x5eed22);
    RingDescriptor zc = small_zc();
    for (const RingDescriptor& target :
         {RingDescriptor::ZZ(), RingDescriptor::Zp(5), RingDescriptor::QQ()}) {
        std::vector<RingElement> images;
        for (std::size_t i = 0; i < zc.params()->size(); ++i)
            images.push_back(RingElement::integer(target, rng.range(-4, 4)));
        RingHomomorphism phi(zc, target, images);
        for (int iter = 0; iter < 60; ++iter) {
            RingElement a = random_element(rng, zc);
            RingElement b = random_element(rng, zc);
            CHECK(phi(a + b) == phi(a) + phi(b));
            CHECK(phi(a * b) == phi(a) * phi(b));
            CHECK(phi(RingElement::one(zc)).is_one());
        }
    }
}

TEST_CASE("identity assignment is the identity") {
    Rng rng(0x5eed23);
    RingDescriptor zc = small_zc();
    std::vector<RingElement> images;
    for (std::size_t i = 0; i < zc.params()->size(); ++i)
        images.push_back(RingElement::parameter(zc, i));
    RingHomomorphism id(zc, zc, images);
    for (int iter = 0; iter < 40; ++iter) {
        RingElement a = random_element(rng, zc);
        CHECK(id(a) == a);
    }
}

TEST_CASE("multi-parameter arithmetic specializes to univariate arithmetic") {
    // Substituting t-polynomials for every C turns ZZ[C]-identities into
    // ZZ[t]-identities; the two sides are computed by independent paths.
    Rng rng(0x5eed24);
    RingDescriptor zc = small_zc();
    std::vector<ParameterVariable> tvar{ParameterVariable::symbol("t")};
    RingDescriptor zt = RingDescriptor::ZC(std::make_shared<ParameterSet>(std::move(tvar)));
    RingElement t = RingElement::parameter(zt, 0);
    std::vector<RingElement> images{t * t - RingElement::one(zt),
                                    t + RingElement::integer(zt, 3),
                                    RingElement::integer(zt, -2) * t};
    RingHomomorphism phi(zc, zt, images);
    for (int iter = 0; iter < 60; ++iter) {
        RingElement a = random_element(rng, zc);
        RingElement b = random_element(rng, zc);
        CHECK(phi(a * b) == phi(a) * phi(b));
        CHECK(phi(a + b) == phi(a) + phi(b));
    }
}

TEST_CASE("parameter serialization forms") {
    ParameterVariable p = ParameterVariable::marked(M("x2*x1"), M("x1^2"));
    CHECK(p.name == "C[0,1,1|0,2,0]");
    CHECK(p.display() == "C_{011,020}");

    RingDescriptor zc = small_zc();
    RingElement via_tuple = RingElement::parse(zc, "C[0,1,1|0,2,0]");
    RingElement via_alias = RingElement::parse(zc, "C_{011,020}");
    CHECK(via_tuple == via_alias);
    CHECK(via_tuple == RingElement::parameter(zc, 0));

    RingElement e = RingElement::parse(zc, "C_{011,020}^2*C_{011,101} - 2*t + 7");
    CHECK(e.total_degree() == 3);
    CHECK(RingElement::parse(zc, e.str()) == e);
    CHECK_THROWS_AS(RingElement::parse(zc, "C_{999,000}"), std::invalid_argument);
}

TEST_CASE("scalar parsing") {
    CHECK(RingElement::parse(RingDescriptor::ZZ(), "-91") ==
          RingElement::integer(RingDescriptor::ZZ(), -91));
    RingDescriptor qq = RingDescriptor::QQ();
    CHECK(RingElement::parse(qq, "3/6") == RingElement::rational(qq, mpq_class(1, 2)));
    RingDescriptor z5 = RingDescriptor::Zp(5);
    CHECK(RingElement::parse(z5, "12") == RingElement::integer(z5, 2));
}

TEST_SUITE_END();
