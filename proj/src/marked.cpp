#include "mfam/marked.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

#include "mfam/oracle.hpp"

namespace mfam {

Poly MarkedPolynomial::full() const {
    Poly p = tail;
    p.add_term(head, RingElement::one(tail.ring()));
    return p;
}

MarkedSet::MarkedSet(StableIdeal ideal, RingDescriptor ring, std::vector<MarkedPolynomial> polys)
    : ideal_(std::move(ideal)), ring_(std::move(ring)), polys_(std::move(polys)) {
    const auto& gens = ideal_.generators();
    if (polys_.size() != gens.size())
        throw std::invalid_argument("marked set needs exactly one polynomial per generator");
    for (std::size_t i = 0; i < polys_.size(); ++i) {
        const MarkedPolynomial& f = polys_[i];
        if (f.head != gens[i])
            throw std::invalid_argument("marked polynomial heads must follow the generator order");
        if (f.tail.ring() != ring_)
            throw std::invalid_argument("tail coefficients outside the declared ring");
        if (f.tail.var_count() != ideal_.var_count())
            throw std::invalid_argument("tail variable count mismatch");
        for (const auto& [m, c] : f.tail.terms()) {
            if (m.degree() != f.head.degree())
                throw std::invalid_argument("tail of " + f.head.str() +
                                            " is not homogeneous of the head degree");
            if (m == f.head)
                throw std::invalid_argument("non-monic marked polynomial with head " + f.head.str());
            if (ideal_.contains(m))
                throw std::invalid_argument("tail monomial " + m.str() + " of " + f.head.str() +
                                            " lies in the ideal");
        }
    }
}

MarkedSet build_marked_set(const StableIdeal& ideal, const RingDescriptor& ring,
                           const std::vector<std::tuple<Monomial, Monomial, RingElement>>& tails) {
    std::vector<MarkedPolynomial> polys;
    for (const Monomial& g : ideal.generators())
        polys.push_back(MarkedPolynomial{g, Poly(ring, ideal.var_count())});
    for (const auto& [head, mono, coeff] : tails) {
        std::size_t idx = ideal.generator_index(head);
        polys[idx].tail.add_term(mono, coeff);
    }
    return MarkedSet(ideal, ring, std::move(polys));
}

MarkedSet monomial_marked_set(const StableIdeal& ideal, const RingDescriptor& ring) {
    return build_marked_set(ideal, ring, {});
}

DegreeSlice degree_slice(const MarkedSet& set, unsigned s) {
    const StableIdeal& J = set.ideal();
    if (s < J.min_gen_degree())
        throw std::invalid_argument("degree below the minimal generator degree");
    DegreeSlice slice{s, {}, {}};
    for (std::size_t i = 0; i < set.size(); ++i) {
        const Monomial& head = set.at(i).head;
        if (head.degree() > s) continue;
        for (Monomial& cof : monomials_of_degree(J.var_count(), s - head.degree())) {
            Monomial product = head * cof;
            bool in_v = cof.is_unit() || head.min_var() >= cof.max_var();
            auto& bucket = in_v ? slice.v_multiples : slice.hat_multiples;
            bucket.push_back(SliceMultiple{std::move(cof), i, std::move(product)});
        }
    }
    auto by_head = [](const SliceMultiple& a, const SliceMultiple& b) {
        int c = compare(TermOrder::DegLex, a.head_product, b.head_product);
        if (c != 0) return c > 0;
        return a.poly_index < b.poly_index;
    };
    std::sort(slice.v_multiples.begin(), slice.v_multiples.end(), by_head);
    std::sort(slice.hat_multiples.begin(), slice.hat_multiples.end(), by_head);
    return slice;
}

namespace {

std::vector<Monomial> ideal_support(const StableIdeal& J, const Poly& h) {
    std::vector<Monomial> out;
    for (const auto& [m, c] : h.terms())
        if (J.contains(m)) out.push_back(m);
    return out;
}

#ifndef NDEBUG
// One step must replace the eliminated cofactor by strictly Lex-smaller ones;
// this is the noetherianity argument for the reduction.
void assert_cofactor_descent(const StableIdeal& J, const Monomial& cofactor, const Poly& added) {
    for (const auto& [m, c] : added.terms()) {
        if (!J.contains(m)) continue;
        StarDecomposition sd = J.star_decompose(m);
        assert(compare(TermOrder::Lex, sd.cofactor, cofactor) < 0);
    }
}
#endif

Poly reduce_stepwise(const MarkedSet& set, Poly current, const ReduceOptions& options) {
    const StableIdeal& J = set.ideal();
    while (true) {
        std::vector<Monomial> candidates = ideal_support(J, current);
        if (candidates.empty()) return current;
        std::size_t choice = 0;
        if (options.pick) {
            choice = options.pick(candidates);
            if (choice >= candidates.size())
                throw std::invalid_argument("pick strategy returned an out-of-range index");
        }
        const Monomial target = candidates[choice];
        RingElement c = current.coeff(target);
        StarDecomposition sd = J.star_decompose(target);
        std::size_t idx = set.find(sd.generator);
        Poly added = set.at(idx).tail.times_monomial(sd.cofactor).scaled(-c);
#ifndef NDEBUG
        assert_cofactor_descent(J, sd.cofactor, added);
#endif
        current.add_term(target, -c);
        current += added;
        if (options.trace)
            options.trace->push_back(ReduceStep{target, idx, sd.cofactor, std::move(c)});
    }
}

}  // namespace

std::size_t AuxiliaryBasis::find(const Monomial& head) const {
    for (std::size_t i = 0; i < polys.size(); ++i)
        if (polys[i].head == head) return i;
    throw std::invalid_argument(head.str() + " is not a degree-" + std::to_string(s) +
                                " monomial of the ideal");
}

AuxiliaryBasis auxiliary_basis(const MarkedSet& set, unsigned s) {
    const StableIdeal& J = set.ideal();
    if (s < J.min_gen_degree())
        throw std::invalid_argument("degree below the minimal generator degree");

    // Memoized remainders of the J_s monomials; recursion terminates because
    // every substituted monomial has a strictly Lex-smaller cofactor.
    std::map<Monomial, Poly, DegLexDesc> memo;
    auto rem = [&](auto&& self, const Monomial& m) -> const Poly& {
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        StarDecomposition sd = J.star_decompose(m);
        Poly step = set.at(set.find(sd.generator)).tail.times_monomial(sd.cofactor);
        Poly result(set.ring(), J.var_count());
        for (const auto& [mono, c] : step.terms()) {
            if (J.contains(mono))
                result += self(self, mono).scaled(-c);
            else
                result.add_term(mono, -c);
        }
        return memo.emplace(m, std::move(result)).first->second;
    };

    AuxiliaryBasis aux{s, {}};
    for (const Monomial& gamma : J.slice(s))
        aux.polys.push_back(MarkedPolynomial{gamma, -rem(rem, gamma)});
    return aux;
}

Poly reduce(const MarkedSet& set, const Poly& h) { return reduce(set, h, ReduceOptions{}); }

Poly reduce(const MarkedSet& set, const Poly& h, const ReduceOptions& options) {
    if (h.ring() != set.ring()) throw std::invalid_argument("polynomial outside the set's ring");
    if (h.var_count() != set.ideal().var_count())
        throw std::invalid_argument("variable count mismatch");
    auto deg = h.homogeneous_degree();
    if (!deg) throw std::invalid_argument("reduction requires a homogeneous polynomial");
    if (options.mode == ReduceMode::Stepwise) return reduce_stepwise(set, h, options);

    // Single pass through the auxiliary basis of the input degree.
    const StableIdeal& J = set.ideal();
    if (h.is_zero() || *deg < J.min_gen_degree()) return h;
    Poly result(set.ring(), J.var_count());
    AuxiliaryBasis aux = auxiliary_basis(set, *deg);
    for (const auto& [m, c] : h.terms()) {
        if (J.contains(m))
            result += (-aux.polys[aux.find(m)].tail).scaled(c);
        else
            result.add_term(m, c);
    }
    return result;
}

std::vector<EKPair> ek_pairs(const MarkedSet& set) {
    const StableIdeal& J = set.ideal();
    std::vector<EKPair> pairs;
    for (std::size_t i = 0; i < set.size(); ++i) {
        const Monomial& head = set.at(i).head;
        for (VarIndex j = head.min_var() + 1; j < J.var_count(); ++j) {
            Monomial moved = head * Monomial::variable(J.var_count(), j);
            StarDecomposition sd = J.star_decompose(moved);
            pairs.push_back(EKPair{i, j, set.find(sd.generator), sd.cofactor, moved.degree()});
        }
    }
    return pairs;
}

Poly ek_polynomial(const MarkedSet& set, const EKPair& pair) {
    const Monomial xj = Monomial::variable(set.ideal().var_count(), pair.variable);
    return set.at(pair.base).full().times_monomial(xj) -
           set.at(pair.partner).full().times_monomial(pair.partner_cofactor);
}

ObstructionModule obstructions(const MarkedSet& set, unsigned s) {
    const StableIdeal& J = set.ideal();
    ObstructionModule module{s, {}};
    if (s < J.min_gen_degree()) return module;
    DegreeSlice slice = degree_slice(set, s);
    for (const SliceMultiple& hat : slice.hat_multiples) {
        StarDecomposition sd = J.star_decompose(hat.head_product);
        std::size_t partner = set.find(sd.generator);
        Poly sf = set.at(hat.poly_index).full().times_monomial(hat.cofactor) -
                  set.at(partner).full().times_monomial(sd.cofactor);
        Poly remainder = reduce(set, sf);
        if (!remainder.is_zero()) module.generators.push_back(std::move(remainder));
    }
    return module;
}

BasisCertificate is_marked_basis(const MarkedSet& set) {
    BasisCertificate cert;
    for (const EKPair& pair : ek_pairs(set)) {
        Poly remainder = reduce(set, ek_polynomial(set, pair));
        if (!remainder.is_zero()) cert.witnesses.emplace_back(pair, std::move(remainder));
    }
    cert.basis = cert.witnesses.empty();
    return cert;
}

bool degree_bound_basis_test(const MarkedSet& set) {
    const StableIdeal& J = set.ideal();
    for (unsigned s = J.min_gen_degree(); s <= J.max_gen_degree() + 1; ++s)
        if (!obstructions(set, s).generators.empty()) return false;
    return true;
}

std::variant<MarkedSet, ExtractFailure> extract_marked_set(const StableIdeal& ideal,
                                                           const std::vector<Poly>& generators) {
    if (generators.empty()) throw std::invalid_argument("no generators given");
    const RingDescriptor ring = generators.front().ring();
    if (!ring.is_field())
        throw std::invalid_argument("extract_marked_set requires a field, got " + ring.str());
    for (const Poly& g : generators) {
        if (g.ring() != ring) throw std::invalid_argument("generators over mixed rings");
        if (!g.homogeneous_degree()) throw std::invalid_argument("generators must be homogeneous");
    }

    std::vector<MarkedPolynomial> polys;
    for (const Monomial& g : ideal.generators())
        polys.push_back(MarkedPolynomial{g, Poly(ring, ideal.var_count())});

    for (unsigned s = ideal.min_gen_degree(); s <= ideal.max_gen_degree() + 1; ++s) {
        auto solved = verify::marked_rows_at_degree(ideal, ring, generators, s);
        if (std::holds_alternative<verify::SolverFailure>(solved))
            return ExtractFailure{std::get<verify::SolverFailure>(solved).degree};
        for (auto& row : std::get<std::vector<MarkedPolynomial>>(solved)) {
            // Only rows whose head is a minimal generator contribute tails.
            for (std::size_t i = 0; i < polys.size(); ++i)
                if (polys[i].head == row.head) polys[i].tail = std::move(row.tail);
        }
    }
    return MarkedSet(ideal, ring, std::move(polys));
}

}  // namespace mfam
