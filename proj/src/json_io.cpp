#include "mfam/json_io.hpp"

#include <stdexcept>

namespace mfam::io {

json monomial_json(const Monomial& m) {
    json a = json::array();
    for (Exponent e : m.exponents()) a.push_back(e);
    return a;
}

Monomial monomial_from_json(const json& j, std::size_t n_vars) {
    if (!j.is_array() || j.size() != n_vars)
        throw std::invalid_argument("monomial tuple must list one exponent per variable");
    std::vector<Exponent> exps;
    for (const auto& v : j) exps.push_back(v.get<Exponent>());
    return Monomial(std::move(exps));
}

json ideal_json(const MonomialIdeal& ideal) {
    json j;
    j["vars"] = ideal.var_count();
    json gens = json::array();
    for (const Monomial& g : ideal.generators()) gens.push_back(monomial_json(g));
    j["generators"] = gens;
    return j;
}

MonomialIdeal ideal_from_json(const json& j) {
    std::size_t n_vars = j.at("vars").get<std::size_t>();
    std::vector<Monomial> gens;
    for (const auto& g : j.at("generators")) gens.push_back(monomial_from_json(g, n_vars));
    return MonomialIdeal(n_vars, std::move(gens));
}

json poly_json(const Poly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json t;
        t["monomial"] = monomial_json(m);
        t["coefficient"] = c.str();
        terms.push_back(t);
    }
    json j;
    j["terms"] = terms;
    j["text"] = p.str();
    return j;
}

json param_json(const ParameterVariable& p) {
    json j;
    j["name"] = p.name;
    j["display"] = p.display();
    if (p.marked_pair) {
        j["head"] = monomial_json(p.marked_pair->first);
        j["tail"] = monomial_json(p.marked_pair->second);
    }
    return j;
}

json marked_set_json(const MarkedSet& set) {
    json polys = json::array();
    for (const MarkedPolynomial& f : set.polys()) {
        json p;
        p["head"] = monomial_json(f.head);
        json tail = json::array();
        for (const auto& [m, c] : f.tail.terms()) {
            json t;
            t["monomial"] = monomial_json(m);
            t["coefficient"] = c.str();
            tail.push_back(t);
        }
        p["tail"] = tail;
        polys.push_back(p);
    }
    json j;
    j["ring"] = set.ring().str();
    j["vars"] = set.ideal().var_count();
    j["polys"] = polys;
    return j;
}

RingDescriptor resolve_ring(const std::string& text, const StableIdeal& ideal) {
    if (text == "ZZ[C]") return generic_family(ideal).ring;
    return RingDescriptor::parse(text);
}

MarkedSet marked_set_from_json(const StableIdeal& ideal, const json& j,
                               const std::optional<std::string>& ring_override) {
    std::string ring_text = ring_override ? *ring_override : j.at("ring").get<std::string>();
    RingDescriptor ring = resolve_ring(ring_text, ideal);
    std::vector<std::tuple<Monomial, Monomial, RingElement>> tails;
    for (const auto& p : j.at("polys")) {
        Monomial head = monomial_from_json(p.at("head"), ideal.var_count());
        for (const auto& t : p.at("tail")) {
            Monomial m = monomial_from_json(t.at("monomial"), ideal.var_count());
            RingElement c = RingElement::parse(ring, t.at("coefficient").get<std::string>());
            tails.emplace_back(head, std::move(m), std::move(c));
        }
    }
    return build_marked_set(ideal, ring, tails);
}

json hilbert_json(const HilbertData& data) {
    json coeffs = json::array();
    for (const mpz_class& c : data.binom_coeffs) coeffs.push_back(c.get_str());
    json j;
    j["binomial_coefficients"] = coeffs;
    j["p"] = data.polynomial_text();
    j["gotzmann_number"] = data.gotzmann_number;
    j["rho"] = data.rho;
    return j;
}

namespace {

json ek_json(const SchemeEquations& equations, const EKPair& pair) {
    json j;
    j["base"] = monomial_json(equations.ideal.generators()[pair.base]);
    j["variable"] = pair.variable;
    j["partner"] = monomial_json(equations.ideal.generators()[pair.partner]);
    j["cofactor"] = monomial_json(pair.partner_cofactor);
    j["degree"] = pair.degree;
    return j;
}

json param_poly_json(const RingElement& e) {
    json terms = json::array();
    for (const auto& [exps, c] : e.terms()) {
        json t;
        t["coefficient"] = c.get_str();
        json ev = json::array();
        for (unsigned x : exps) ev.push_back(x);
        t["exponents"] = ev;
        terms.push_back(t);
    }
    return terms;
}

}  // namespace

json equations_json(const SchemeEquations& equations) {
    json params = json::array();
    for (const ParameterVariable& p : equations.ring.params()->vars())
        params.push_back(param_json(p));
    json gens = json::array();
    for (const SchemeGenerator& g : equations.generators) {
        json e;
        e["ek"] = ek_json(equations, g.pair);
        e["residual"] = monomial_json(g.residual);
        e["poly"] = param_poly_json(g.poly);
        e["text"] = g.poly.str();
        gens.push_back(e);
    }
    json j;
    j["ideal"] = ideal_json(equations.ideal.ideal());
    j["params"] = params;
    j["generators"] = gens;
    return j;
}

json stratum_json(const StratumEquations& stratum) {
    json j = equations_json(stratum.base);
    j["order"] = term_order_name(stratum.order);
    json vp = json::array();
    for (const ParameterVariable& p : stratum.vanishing_params) vp.push_back(param_json(p));
    j["vanishing_params"] = vp;
    return j;
}

json embedding_json(const EmbeddingReport& report) {
    json rows = json::array();
    for (const EmbeddingRow& r : report.rows) {
        json row;
        row["s"] = r.s;
        row["equal_to_next"] = r.equal_to_next;
        row["status"] = r.open ? "open" : "locally_closed";
        rows.push_back(row);
    }
    json j;
    j["ideal"] = ideal_json(report.ideal.ideal());
    j["hilbert"] = hilbert_json(report.hilbert);
    j["rows"] = rows;
    return j;
}

}  // namespace mfam::io
