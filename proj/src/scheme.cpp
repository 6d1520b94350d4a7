#include "mfam/scheme.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace mfam {

GenericFamily generic_family(const StableIdeal& ideal) {
    std::vector<ParameterVariable> params;
    for (const Monomial& g : ideal.generators())
        for (const Monomial& beta : ideal.sous_escalier(g.degree()))
            params.push_back(ParameterVariable::marked(g, beta));
    RingDescriptor ring = RingDescriptor::ZC(std::make_shared<ParameterSet>(std::move(params)));

    std::vector<std::tuple<Monomial, Monomial, RingElement>> tails;
    for (std::size_t k = 0; k < ring.params()->size(); ++k) {
        const auto& [head, beta] = *ring.params()->var(k).marked_pair;
        tails.emplace_back(head, beta, RingElement::parameter(ring, k));
    }
    MarkedSet family = build_marked_set(ideal, ring, tails);
    return GenericFamily{ideal, std::move(ring), std::move(family)};
}

SchemeEquations marked_scheme_equations(const StableIdeal& ideal, unsigned jobs) {
    GenericFamily family = generic_family(ideal);
    std::vector<EKPair> pairs = ek_pairs(family.family);

    std::vector<std::vector<SchemeGenerator>> per_pair(pairs.size());
    auto run = [&](std::size_t index) {
        const EKPair& pair = pairs[index];
        Poly remainder = reduce(family.family, ek_polynomial(family.family, pair));
        for (const Monomial& residual : ideal.sous_escalier(pair.degree)) {
            RingElement c = remainder.coeff(residual);
            if (!c.is_zero())
                per_pair[index].push_back(SchemeGenerator{std::move(c), pair, residual});
        }
    };
    if (jobs <= 1 || pairs.size() <= 1) {
        for (std::size_t i = 0; i < pairs.size(); ++i) run(i);
    } else {
        std::vector<std::thread> workers;
        std::size_t n_workers = std::min<std::size_t>(jobs, pairs.size());
        for (std::size_t w = 0; w < n_workers; ++w)
            workers.emplace_back([&, w]() {
                for (std::size_t i = w; i < pairs.size(); i += n_workers) run(i);
            });
        for (auto& t : workers) t.join();
    }

    SchemeEquations equations{ideal, family.ring, {}, 0};
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        equations.slots += ideal.sous_escalier(pairs[i].degree).size();
        for (SchemeGenerator& g : per_pair[i]) equations.generators.push_back(std::move(g));
    }
    return equations;
}

StratumEquations groebner_stratum_equations(const StableIdeal& ideal, TermOrder order,
                                            unsigned jobs) {
    TruncationWitness witness = is_m_truncation(ideal);
    if (!witness.is_truncation)
        throw std::invalid_argument(
            "Groebner stratum equations need an m-truncation ideal; " + ideal.str() +
            " is not the truncation of its saturation");
    StratumEquations stratum{marked_scheme_equations(ideal, jobs), order, {}};
    for (const ParameterVariable& p : stratum.base.ring.params()->vars()) {
        const auto& [head, beta] = *p.marked_pair;
        if (compare(order, beta, head) > 0) stratum.vanishing_params.push_back(p);
    }
    return stratum;
}

TruncationWitness is_m_truncation(const StableIdeal& ideal) {
    bool unit_saturation = false;
    for (const Monomial& g : ideal.generators()) {
        std::vector<Exponent> exps = g.exponents();
        exps[0] = 0;
        if (Monomial(exps).is_unit()) unit_saturation = true;
    }
    if (unit_saturation) {
        // Saturation is the unit ideal; the only candidates are the full
        // degree-m pieces of the polynomial ring.
        unsigned m = ideal.min_gen_degree();
        bool equal = ideal.generators() == monomials_of_degree(ideal.var_count(), m);
        return TruncationWitness{equal, std::nullopt, equal ? m : 0};
    }
    StableIdeal sat = ideal.saturation();
    for (unsigned m = ideal.max_gen_degree(); m >= 1; --m) {
        if (sat.truncate(m) == ideal) return TruncationWitness{true, sat, m};
    }
    return TruncationWitness{false, sat, 0};
}

EmbeddingReport embedding_report(const StableIdeal& saturated, unsigned s_lo, unsigned s_hi) {
    if (!saturated.is_saturated())
        throw std::invalid_argument("embedding report needs a saturated ideal");
    if (s_lo < 1 || s_lo > s_hi) throw std::invalid_argument("bad degree range");
    EmbeddingReport report{saturated, hilbert_data(saturated), {}};
    for (unsigned s = s_lo; s <= s_hi; ++s) {
        bool x1_gen_above = false;
        for (const Monomial& g : saturated.generators())
            if (g.degree() == s + 1 && g[1] > 0) x1_gen_above = true;
        bool equal = !x1_gen_above;
        if (!equal) equal = saturated.truncate(s - 1) == saturated.truncate(s);
        bool open = report.hilbert.rho == 0 || s + 1 >= report.hilbert.rho;
        report.rows.push_back(EmbeddingRow{s, equal, open});
    }
    return report;
}

EmbeddingReport embedding_report(const StableIdeal& saturated) {
    HilbertData hd = hilbert_data(saturated);
    unsigned lo = std::max(1u, saturated.min_gen_degree() - 1);
    unsigned hi = std::max(lo, hd.gotzmann_number);
    return embedding_report(saturated, lo, hi);
}

std::vector<ParameterVariable> stratum_membership_demo(const SchemeEquations& equations) {
    std::vector<ParameterVariable> found;
    for (const SchemeGenerator& g : equations.generators) {
        const ParamTerms& terms = g.poly.terms();
        if (terms.size() != 1) continue;
        const auto& [exps, c] = *terms.begin();
        if (c != 1 && c != -1) continue;
        std::size_t index = exps.size();
        bool single = true;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (exps[i] > 1 || index != exps.size()) {
                single = false;
                break;
            }
            index = i;
        }
        if (!single || index == exps.size()) continue;
        const ParameterVariable& p = equations.ring.params()->var(index);
        if (std::find(found.begin(), found.end(), p) == found.end()) found.push_back(p);
    }
    return found;
}

std::vector<ParameterVariable> stratum_membership_demo(const StableIdeal& ideal) {
    return stratum_membership_demo(marked_scheme_equations(ideal));
}

}  // namespace mfam
