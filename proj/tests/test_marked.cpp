#include <doctest.h>

#include "support.hpp"

using namespace mfam;
using namespace mfam::testing;

namespace {

Poly P(const RingDescriptor& ring, const char* text) { return Poly::parse(ring, 3, text); }

}  // namespace

TEST_SUITE_BEGIN("marked");

TEST_CASE("build_marked_set validation") {
    StableIdeal J = ideal("x2^2,x2*x1,x1^3");
    RingDescriptor zz = RingDescriptor::ZZ();
    MarkedSet F = example_marked_set(zz);
    CHECK(F.size() == 3);
    CHECK(F.at(F.find(M("x2^2"))).full() == P(zz, "x2^2 + 3*x1^2 - x2*x0 + x1*x0"));

    MarkedSet mono = monomial_marked_set(J, zz);
    for (const MarkedPolynomial& f : mono.polys()) CHECK(f.tail.is_zero());

    auto one = RingElement::one(zz);
    // x2*x0 lies in N(J)_2: fine.
    CHECK_NOTHROW(build_marked_set(J, zz, {{M("x2*x1"), M("x2*x0"), one}}));
    // x2^2 lies in J: rejected.
    CHECK_THROWS_AS(build_marked_set(J, zz, {{M("x2*x1"), M("x2^2"), one}}),
                    std::invalid_argument);
    // degree mismatch: rejected.
    CHECK_THROWS_AS(build_marked_set(J, zz, {{M("x2*x1"), M("x0^3"), one}}),
                    std::invalid_argument);
    // head must be a minimal generator.
    CHECK_THROWS_AS(build_marked_set(J, zz, {{M("x2^2*x1"), M("x1^2*x0"), one}}),
                    std::invalid_argument);
}

TEST_CASE("degree slices of the running example") {
    RingDescriptor zz = RingDescriptor::ZZ();
    MarkedSet F = example_marked_set(zz);

    DegreeSlice s2 = degree_slice(F, 2);
    CHECK(s2.v_multiples.size() == 2);
    CHECK(s2.hat_multiples.empty());

    DegreeSlice s3 = degree_slice(F, 3);
    CHECK(s3.v_multiples.size() == 6);
    REQUIRE(s3.hat_multiples.size() == 1);
    CHECK(F.at(s3.hat_multiples[0].poly_index).head == M("x2*x1"));
    CHECK(s3.hat_multiples[0].cofactor == M("x2"));
    // Heads of the v-multiples enumerate J_3.
    std::vector<Monomial> heads;
    for (const SliceMultiple& v : s3.v_multiples) heads.push_back(v.head_product);
    CHECK(heads == F.ideal().slice(3));

    DegreeSlice s4 = degree_slice(F, 4);
    CHECK(s4.hat_multiples.size() == 4);
    CHECK(s4.v_multiples.size() == F.ideal().slice(4).size());
}

TEST_CASE("reduction reproduces the worked example") {
    RingDescriptor zz = RingDescriptor::ZZ();
    MarkedSet F = example_marked_set(zz);

    CHECK(reduce(F, P(zz, "x2^2*x1")) == P(zz, "-10*x1^2*x0 + x1*x0^2"));
    CHECK(reduce(F, P(zz, "x2^3")) == P(zz, "-6*x1^2*x0 + x2*x0^2 - 2*x1*x0^2"));

    // A polynomial supported outside J is its own remainder.
    Poly outside = P(zz, "7*x1^2*x0 - x0^3");
    CHECK(reduce(F, outside) == outside);

    // S^EK(f011, f002) reduces to the degree-3 obstruction.
    Poly sek = F.at(F.find(M("x2*x1"))).full().times_monomial(M("x2")) -
               F.at(F.find(M("x2^2"))).full().times_monomial(M("x1"));
    CHECK(reduce(F, sek) == P(zz, "-10*x1^2*x0"));

    CHECK_THROWS_AS(reduce(F, P(zz, "x2^2 + x1^3")), std::invalid_argument);
}

TEST_CASE("auxiliary basis matches the worked example") {
    RingDescriptor zz = RingDescriptor::ZZ();
    MarkedSet F = example_marked_set(zz);

    AuxiliaryBasis s3 = auxiliary_basis(F, 3);
    auto full3 = [&](const char* head) { return s3.polys[s3.find(M(head))].full(); };
    CHECK(full3("x1^3") == P(zz, "x1^3 - 3*x1^2*x0"));
    CHECK(full3("x2*x1*x0") == P(zz, "x2*x1*x0 - x1*x0^2"));
    CHECK(full3("x2*x1^2") == P(zz, "x2*x1^2 - x1^2*x0"));
    CHECK(full3("x2^2*x0") == P(zz, "x2^2*x0 + 3*x1^2*x0 - x2*x0^2 + x1*x0^2"));
    CHECK(full3("x2^2*x1") == P(zz, "x2^2*x1 + 10*x1^2*x0 - x1*x0^2"));
    CHECK(full3("x2^3") == P(zz, "x2^3 + 6*x1^2*x0 - x2*x0^2 + 2*x1*x0^2"));

    AuxiliaryBasis s4 = auxiliary_basis(F, 4);
    auto full4 = [&](const char* head) { return s4.polys[s4.find(M(head))].full(); };
    CHECK(full4("x1^3*x0") == P(zz, "x1^3*x0 - 3*x1^2*x0^2"));
    CHECK(full4("x1^4") == P(zz, "x1^4 - 9*x1^2*x0^2"));
    CHECK(full4("x2*x1*x0^2") == P(zz, "x2*x1*x0^2 - x1*x0^3"));
    CHECK(full4("x2*x1^2*x0") == P(zz, "x2*x1^2*x0 - x1^2*x0^2"));
    CHECK(full4("x2*x1^3") == P(zz, "x2*x1^3 - 3*x1^2*x0^2"));
    CHECK(full4("x2^2*x0^2") == P(zz, "x2^2*x0^2 + 3*x1^2*x0^2 - x2*x0^3 + x1*x0^3"));
    CHECK(full4("x2^2*x1*x0") == P(zz, "x2^2*x1*x0 + 10*x1^2*x0^2 - x1*x0^3"));
    CHECK(full4("x2^2*x1^2") == P(zz, "x2^2*x1^2 + 29*x1^2*x0^2"));
    CHECK(full4("x2^3*x0") == P(zz, "x2^3*x0 + 6*x1^2*x0^2 - x2*x0^3 + 2*x1*x0^3"));
    CHECK(full4("x2^3*x1") == P(zz, "x2^3*x1 + 20*x1^2*x0^2 - x1*x0^3"));
    CHECK(full4("x2^4") == P(zz, "x2^4 - 91*x1^2*x0^2 - x2*x0^3 + 3*x1*x0^3"));
}

TEST_CASE("monomial marked set has trivial auxiliary basis") {
    RingDescriptor zz = RingDescriptor::ZZ();
    MarkedSet mono = monomial_marked_set(ideal("x2^2,x2*x1,x1^3"), zz);
    for (unsigned s = 2; s <= 4; ++s) {
        for (const MarkedPolynomial& f : auxiliary_basis(mono, s).polys) CHECK(f.tail.is_zero());
        CHECK(obstructions(mono, s).generators.empty());
    }
    CHECK(is_marked_basis(mono).basis);
    CHECK(degree_bound_basis_test(mono));
}

TEST_CASE("EK pairs") {
    RingDescriptor zz = RingDescriptor::ZZ();
    MarkedSet F = example_marked_set(zz);
    auto pairs = ek_pairs(F);
    REQUIRE(pairs.size() == 2);
    // Canonical order: base x1^3 (DegLex-greatest head) first.
    CHECK(F.at(pairs[0].base).head == M("x1^3"));
    CHECK(pairs[0].variable == 2);
    CHECK(F.at(pairs[0].partner).head == M("x2*x1"));
    CHECK(pairs[0].partner_cofactor == M("x1^2"));
    CHECK(pairs[1].base == F.find(M("x2*x1")));
    CHECK(pairs[1].variable == 2);
    CHECK(F.at(pairs[1].partner).head == M("x2^2"));
    CHECK(pairs[1].partner_cofactor == M("x1"));

    MarkedSet single = monomial_marked_set(ideal("x2"), zz);
    CHECK(ek_pairs(single).empty());
}

TEST_CASE("obstruction modules of the running example") {
    RingDescriptor zz = RingDescriptor::ZZ();
    MarkedSet F = example_marked_set(zz);

    ObstructionModule s3 = obstructions(F, 3);
    REQUIRE(s3.generators.size() == 1);
    CHECK(s3.generators[0] == P(zz, "-10*x1^2*x0"));

    ObstructionModule s4 = obstructions(F, 4);
    REQUIRE(s4.generators.size() == 3);  // the fourth SF element reduces to zero
    CHECK(s4.generators[0] == P(zz, "-10*x1^2*x0^2"));
    CHECK(s4.generators[1] == P(zz, "-30*x1^2*x0^2"));
    CHECK(s4.generators[2] == P(zz, "-10*x1^2*x0^2"));
}

TEST_CASE("basis test over the four rings") {
    auto run = [&](const RingDescriptor& ring) { return is_marked_basis(example_marked_set(ring)); };
    BasisCertificate over_q = run(RingDescriptor::QQ());
    CHECK_FALSE(over_q.basis);
    REQUIRE(over_q.witnesses.size() == 1);
    CHECK(over_q.witnesses[0].second.coeff(M("x1^2*x0")) ==
          RingElement::integer(RingDescriptor::QQ(), -10));

    CHECK_FALSE(run(RingDescriptor::ZZ()).basis);
    CHECK(run(RingDescriptor::Zp(5)).basis);
    CHECK(run(RingDescriptor::Zp(2)).basis);
}

TEST_CASE("non-unique marked sets fail the basis test with the right witness") {
    // I = (x2^2 + x0^2, x2*x1, x1^3) has x1*x0^2 in I intersect <N(J)>.
    StableIdeal J = ideal("x2^2,x2*x1,x1^3");
    RingDescriptor zz = RingDescriptor::ZZ();
    MarkedSet F =
        build_marked_set(J, zz, {{M("x2^2"), M("x0^2"), RingElement::one(zz)}});
    BasisCertificate cert = is_marked_basis(F);
    CHECK_FALSE(cert.basis);
    bool witness_on_x1x02 = false;
    for (const auto& [pair, w] : cert.witnesses)
        witness_on_x1x02 |= !w.coeff(M("x1*x0^2")).is_zero();
    CHECK(witness_on_x1x02);

    // The witness coefficient is a unit, so no prime rescues this set.
    MarkedSet F2 = build_marked_set(J, RingDescriptor::Zp(2),
                                    {{M("x2^2"), M("x0^2"), RingElement::one(RingDescriptor::Zp(2))}});
    CHECK_FALSE(is_marked_basis(F2).basis);
}

TEST_CASE("degree-bound test agrees with the EK criterion") {
    RingDescriptor qq = RingDescriptor::QQ();
    CHECK_FALSE(degree_bound_basis_test(example_marked_set(qq)));
    CHECK(obstructions(example_marked_set(qq), 3).generators.size() == 1);

    Rng rng(0x5eed30);
    int cases = 0;
    while (cases < 120) {
        StableIdeal J = random_stable_ideal(rng, 2 + rng.below(2), 4);
        RingDescriptor ring = rng.chance(0.5) ? RingDescriptor::QQ() : RingDescriptor::Zp(5);
        MarkedSet F = random_marked_set(rng, J, ring);
        CHECK(is_marked_basis(F).basis == degree_bound_basis_test(F));
        ++cases;
    }
}

TEST_CASE("remainder is independent of the reduction strategy") {
    Rng rng(0x5eed31);
    int cases = 0;
    while (cases < 220) {
        StableIdeal J = random_stable_ideal(rng, 2 + rng.below(2), 4);
        RingDescriptor ring = rng.chance(0.5) ? RingDescriptor::QQ() : RingDescriptor::Zp(5);
        MarkedSet F = random_marked_set(rng, J, ring);
        unsigned s = J.min_gen_degree() + rng.below(3);
        Poly h = random_homogeneous(rng, ring, J.var_count(), s);
        Poly expected = reduce(F, h);

        for (std::uint64_t seed : {1ull, 2ull}) {
            ReduceOptions options;
            std::mt19937_64 pick_engine(seed * 977 + cases);
            options.pick = [&pick_engine](const std::vector<Monomial>& candidates) {
                return static_cast<std::size_t>(pick_engine() % candidates.size());
            };
            CHECK(reduce(F, h, options) == expected);
        }
        CHECK(expected.homogeneous_degree().has_value());
        for (const auto& [m, c] : expected.terms()) CHECK_FALSE(J.contains(m));
        ++cases;
    }
}

TEST_CASE("reduction is linear") {
    Rng rng(0x5eed32);
    int cases = 0;
    while (cases < 200) {
        StableIdeal J = random_stable_ideal(rng, 2 + rng.below(2), 4);
        RingDescriptor ring = rng.chance(0.5) ? RingDescriptor::QQ() : RingDescriptor::Zp(5);
        MarkedSet F = random_marked_set(rng, J, ring);
        unsigned s = J.min_gen_degree() + rng.below(3);
        Poly h1 = random_homogeneous(rng, ring, J.var_count(), s);
        Poly h2 = random_homogeneous(rng, ring, J.var_count(), s);
        RingElement a = RingElement::integer(ring, rng.range(-4, 4));
        RingElement b = RingElement::integer(ring, rng.range(-4, 4));
        Poly combined = h1.scaled(a) + h2.scaled(b);
        CHECK(reduce(F, combined) == reduce(F, h1).scaled(a) + reduce(F, h2).scaled(b));
        ++cases;
    }
}

TEST_CASE("single-pass reduction through the auxiliary basis agrees") {
    Rng rng(0x5eed33);
    int cases = 0;
    while (cases < 120) {
        StableIdeal J = random_stable_ideal(rng, 2 + rng.below(2), 4);
        RingDescriptor ring = rng.chance(0.5) ? RingDescriptor::QQ() : RingDescriptor::Zp(5);
        MarkedSet F = random_marked_set(rng, J, ring);
        unsigned s = J.min_gen_degree() + rng.below(3);
        Poly h = random_homogeneous(rng, ring, J.var_count(), s);
        ReduceOptions via_aux;
        via_aux.mode = ReduceMode::ViaAuxiliary;
        CHECK(reduce(F, h, via_aux) == reduce(F, h));
        ++cases;
    }
}

TEST_CASE("the auxiliary basis spans every slice multiple") {
    Rng rng(0x5eed34);
    int cases = 0;
    while (cases < 80) {
        StableIdeal J = random_stable_ideal(rng, 2 + rng.below(2), 3);
        RingDescriptor ring = RingDescriptor::QQ();
        MarkedSet F = random_marked_set(rng, J, ring);
        unsigned s = J.min_gen_degree() + rng.below(2);
        AuxiliaryBasis aux = auxiliary_basis(F, s);
        DegreeSlice slice = degree_slice(F, s);
        bool basis = is_marked_basis(F).basis;
        auto expand = [&](const SliceMultiple& mult) {
            Poly g = F.at(mult.poly_index).full().times_monomial(mult.cofactor);
            Poly snapshot = g;
            for (const auto& [mono, c] : snapshot.terms())
                if (J.contains(mono)) g -= aux.polys[aux.find(mono)].full().scaled(c);
            return g;
        };
        for (const SliceMultiple& mult : slice.v_multiples) {
            // F^(s) lies in the span of the auxiliary basis, so the
            // substitution telescopes to zero.
            CHECK(expand(mult).is_zero());
        }
        for (const SliceMultiple& mult : slice.hat_multiples) {
            Poly g = expand(mult);
            for (const auto& [mono, c] : g.terms()) CHECK_FALSE(J.contains(mono));
            if (basis) CHECK(g.is_zero());
        }
        ++cases;
    }
}

TEST_CASE("extract_marked_set recovers marked sets from ideal generators") {
    StableIdeal J = ideal("x2^2,x2*x1,x1^3");
    RingDescriptor z5 = RingDescriptor::Zp(5);
    MarkedSet F = example_marked_set(z5);
    REQUIRE(is_marked_basis(F).basis);

    std::vector<Poly> gens;
    for (const MarkedPolynomial& f : F.polys()) gens.push_back(f.full());
    auto result = extract_marked_set(J, gens);
    REQUIRE(std::holds_alternative<MarkedSet>(result));
    const MarkedSet& recovered = std::get<MarkedSet>(result);
    for (std::size_t i = 0; i < F.size(); ++i) CHECK(recovered.at(i).tail == F.at(i).tail);

    // Random invertible recombination within each degree gives the same set.
    std::size_t i002 = F.find(M("x2^2")), i011 = F.find(M("x2*x1"));
    std::vector<Poly> mixed = gens;
    mixed[i002] += gens[i011].scaled(RingElement::integer(z5, 3));  // both of degree 2
    mixed[i011] += mixed[i002].scaled(RingElement::integer(z5, 2));
    mixed.push_back(gens[F.find(M("x1^3"))].times_monomial(M("x0")));  // redundant extra generator
    auto remixed = extract_marked_set(J, mixed);
    REQUIRE(std::holds_alternative<MarkedSet>(remixed));
    for (std::size_t i = 0; i < F.size(); ++i)
        CHECK(std::get<MarkedSet>(remixed).at(i).tail == F.at(i).tail);

    // The non-basis ideal of the uniqueness remark fails at degree 3.
    RingDescriptor qq = RingDescriptor::QQ();
    std::vector<Poly> bad{P(qq, "x2^2 + x0^2"), P(qq, "x2*x1"), P(qq, "x1^3")};
    auto failure = extract_marked_set(J, bad);
    REQUIRE(std::holds_alternative<ExtractFailure>(failure));
    CHECK(std::get<ExtractFailure>(failure).degree == 3);

    CHECK_THROWS_AS(extract_marked_set(J, std::vector<Poly>{P(RingDescriptor::ZZ(), "x2^2")}),
                    std::invalid_argument);
}

TEST_SUITE_END();
