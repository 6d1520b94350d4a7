#include <doctest.h>

#include "support.hpp"

using namespace mfam;
using namespace mfam::testing;

namespace {

std::vector<Poly> full_polys(const MarkedSet& set) {
    std::vector<Poly> out;
    for (const MarkedPolynomial& f : set.polys()) out.push_back(f.full());
    return out;
}

std::vector<Poly> slice_span(const MarkedSet& set, unsigned s) {
    // The v-multiples F^(s) as plain polynomials.
    std::vector<Poly> out;
    for (const SliceMultiple& v : degree_slice(set, s).v_multiples)
        out.push_back(set.at(v.poly_index).full().times_monomial(v.cofactor));
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("rank of the running example's degree-3 span") {
    RingDescriptor qq = RingDescriptor::QQ();
    MarkedSet F = example_marked_set(qq);
    auto matrix = verify::ideal_slice_matrix(qq, slice_span(F, 3), 3,
                                             verify::degree_columns(3, 3));
    CHECK(verify::row_space_rank(matrix) == 6);
    CHECK(F.ideal().slice(3).size() == 6);

    verify::DegreeMatrix empty{3, verify::degree_columns(3, 3), {}, qq};
    CHECK(verify::row_space_rank(empty) == 0);
}

TEST_CASE("the non-strongly-stable counterexample loses rank") {
    // J = (x2^2, x1^2) with F = {x2^2 + x2x1, x1^2 + x2x1}: rk I_3 = 5 < 6 = rk J_3.
    MonomialIdeal J = MonomialIdeal::parse("x2^2,x1^2", 3);
    REQUIRE_FALSE(is_strongly_stable(J));
    RingDescriptor qq = RingDescriptor::QQ();
    std::vector<Poly> gens{Poly::parse(qq, 3, "x2^2 + x2*x1"), Poly::parse(qq, 3, "x1^2 + x2*x1")};
    auto matrix = verify::ideal_slice_matrix(qq, gens, 3, verify::degree_columns(3, 3));
    CHECK(verify::row_space_rank(matrix) == 5);
    CHECK(J.slice(3).size() == 6);
}

TEST_CASE("intersection with the sous-escalier on the running example") {
    RingDescriptor qq = RingDescriptor::QQ();
    MarkedSet F = example_marked_set(qq);
    std::vector<Poly> gens = full_polys(F);

    auto basis3 = verify::intersect_with_sous_escalier(qq, gens, F.ideal().ideal(), 3);
    REQUIRE(basis3.size() == 1);
    CHECK(basis3[0] == Poly::monomial(qq, M("x1^2*x0"), RingElement::one(qq)));

    auto basis4 = verify::intersect_with_sous_escalier(qq, gens, F.ideal().ideal(), 4);
    REQUIRE(basis4.size() == 1);
    CHECK(basis4[0] == Poly::monomial(qq, M("x1^2*x0^2"), RingElement::one(qq)));

    // A monomial generating set has empty intersection.
    std::vector<Poly> monos;
    for (const Monomial& g : F.ideal().generators())
        monos.push_back(Poly::monomial(qq, g, RingElement::one(qq)));
    CHECK(verify::intersect_with_sous_escalier(qq, monos, F.ideal().ideal(), 3).empty());
}

TEST_CASE("unique marked set solver") {
    RingDescriptor z5 = RingDescriptor::Zp(5);
    StableIdeal J = ideal("x2^2,x2*x1,x1^3");
    MarkedSet F = example_marked_set(z5);
    std::vector<Poly> gens = full_polys(F);

    auto solved = verify::unique_marked_set_solver(J, z5, gens);
    REQUIRE(std::holds_alternative<std::vector<MarkedPolynomial>>(solved));
    const auto& rows = std::get<std::vector<MarkedPolynomial>>(solved);
    REQUIRE(rows.size() == 3);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].head == F.at(i).head);
        CHECK(rows[i].tail == F.at(i).tail);
    }

    // Mixing the spans does not change the answer.
    std::size_t i002 = F.find(M("x2^2")), i011 = F.find(M("x2*x1"));
    std::vector<Poly> mixed = gens;
    mixed[i002] += gens[i011].scaled(RingElement::integer(z5, 4));
    auto remixed = verify::unique_marked_set_solver(J, z5, mixed);
    REQUIRE(std::holds_alternative<std::vector<MarkedPolynomial>>(remixed));
    for (std::size_t i = 0; i < rows.size(); ++i)
        CHECK(std::get<std::vector<MarkedPolynomial>>(remixed)[i].tail == rows[i].tail);

    // The ideal from the uniqueness remark fails at degree 3.
    RingDescriptor qq = RingDescriptor::QQ();
    std::vector<Poly> bad{Poly::parse(qq, 3, "x2^2 + x0^2"), Poly::parse(qq, 3, "x2*x1"),
                          Poly::parse(qq, 3, "x1^3")};
    auto failure = verify::marked_rows_at_degree(J, qq, bad, 3);
    REQUIRE(std::holds_alternative<verify::SolverFailure>(failure));
    CHECK(std::get<verify::SolverFailure>(failure).degree == 3);
}

TEST_CASE("direct-sum rank law for marked sets") {
    Rng rng(0x5eed40);
    int cases = 0;
    while (cases < 200) {
        StableIdeal J = random_stable_ideal(rng, 2 + rng.below(2), 4);
        RingDescriptor field = rng.chance(0.5) ? RingDescriptor::QQ() : RingDescriptor::Zp(5);
        MarkedSet F = random_marked_set(rng, J, field);
        unsigned s = J.min_gen_degree() + rng.below(J.max_gen_degree() + 3 - J.min_gen_degree());
        std::vector<Poly> span = slice_span(F, s);
        auto matrix = verify::ideal_slice_matrix(field, span, s,
                                                 verify::degree_columns(J.var_count(), s));
        CHECK(verify::row_space_rank(matrix) == J.slice(s).size());
        // The span of F^(s) meets the sous-escalier span trivially, basis or not.
        CHECK(verify::intersect_with_sous_escalier(field, span, J.ideal(), s).empty());
        ++cases;
    }
}

TEST_CASE("oracle agreement: obstructions span the intersection module") {
    Rng rng(0x5eed41);
    int cases = 0;
    while (cases < 120) {
        StableIdeal J = random_stable_ideal(rng, 2 + rng.below(2), 4);
        RingDescriptor field = rng.chance(0.5) ? RingDescriptor::QQ() : RingDescriptor::Zp(5);
        MarkedSet F = random_marked_set(rng, J, field);
        std::vector<Poly> gens = full_polys(F);
        bool ek_basis = is_marked_basis(F).basis;
        bool oracle_empty = true;
        for (unsigned s = J.min_gen_degree(); s <= J.max_gen_degree() + 1; ++s) {
            auto intersection = verify::intersect_with_sous_escalier(field, gens, J.ideal(), s);
            oracle_empty = oracle_empty && intersection.empty();
            CHECK(same_span(field, obstructions(F, s).generators, intersection, J.var_count(), s));
        }
        CHECK(ek_basis == oracle_empty);
        CHECK(ek_basis == degree_bound_basis_test(F));
        ++cases;
    }
}

TEST_CASE("bareiss and rational elimination agree") {
    Rng rng(0x5eed42);
    RingDescriptor qq = RingDescriptor::QQ();
    for (int iter = 0; iter < 120; ++iter) {
        unsigned rows = 1 + rng.below(6), cols = 1 + rng.below(6);
        verify::DegreeMatrix m{0, {}, {}, qq};
        for (unsigned c = 0; c < cols; ++c)
            m.columns.push_back(Monomial::variable(cols, c));  // placeholder labels
        std::vector<std::vector<RingElement>> copy;
        for (unsigned r = 0; r < rows; ++r) {
            std::vector<RingElement> row;
            for (unsigned c = 0; c < cols; ++c)
                row.push_back(RingElement::integer(qq, rng.range(-5, 5)));
            m.rows.push_back(row);
            copy.push_back(row);
        }
        unsigned via_bareiss = verify::row_space_rank(m);  // integral data takes the Bareiss path
        unsigned via_rref = verify::rref(copy, qq);
        CHECK(via_bareiss == via_rref);
    }
}

TEST_SUITE_END();
