#ifndef MFAM_TESTS_SUPPORT_HPP
#define MFAM_TESTS_SUPPORT_HPP

#include <deque>
#include <random>
#include <set>
#include <vector>

#include "mfam/marked.hpp"
#include "mfam/oracle.hpp"

// Test-side oracles and random generators. Everything here is deliberately
// brute-force and independent of the library's fast paths.
namespace mfam::testing {

inline Monomial M(const char* text, std::size_t n_vars = 3) {
    return Monomial::parse(text, n_vars);
}

inline StableIdeal ideal(const char* text, std::size_t n_vars = 3) {
    return StableIdeal::parse(text, n_vars);
}

// BFS over single elementary moves x_j -> x_i (i > j): is `a` reachable
// from `b`? The transitive-closure definition of the Borel order.
inline bool borel_geq_bfs(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("unequal degrees");
    std::set<std::vector<Exponent>> seen;
    std::deque<Monomial> queue{b};
    seen.insert(b.exponents());
    while (!queue.empty()) {
        Monomial current = queue.front();
        queue.pop_front();
        if (current == a) return true;
        for (VarIndex j = 0; j < current.var_count(); ++j) {
            if (current[j] == 0) continue;
            for (VarIndex i = j + 1; i < current.var_count(); ++i) {
                Monomial moved = current / Monomial::variable(current.var_count(), j) *
                                 Monomial::variable(current.var_count(), i);
                if (seen.insert(moved.exponents()).second) queue.push_back(std::move(moved));
            }
        }
    }
    return false;
}

// Brute-force *_J decomposition: scan every generator dividing m for the
// min/max condition; returns all matches.
inline std::vector<StarDecomposition> star_decompose_bruteforce(const StableIdeal& J,
                                                                const Monomial& m) {
    std::vector<StarDecomposition> found;
    for (const Monomial& g : J.generators()) {
        if (!g.divides(m)) continue;
        Monomial cofactor = m / g;
        if (cofactor.is_unit() || g.min_var() >= cofactor.max_var())
            found.push_back(StarDecomposition{g, cofactor});
    }
    return found;
}

// Saturation via iterated colon by x0 on generators; independent of the
// x0-stripping shortcut.
inline MonomialIdeal colon_saturation(const MonomialIdeal& J) {
    MonomialIdeal current = J;
    while (true) {
        std::vector<Monomial> next;
        Monomial x0 = Monomial::variable(J.var_count(), 0);
        for (const Monomial& g : current.generators())
            next.push_back(g[0] > 0 ? g / x0 : g);
        MonomialIdeal colon(J.var_count(), next);
        if (colon == current) return current;
        current = colon;
    }
}

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    unsigned below(unsigned n) { return std::uniform_int_distribution<unsigned>(0, n - 1)(engine); }
    long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine); }
    bool chance(double p) { return std::uniform_real_distribution<double>(0, 1)(engine) < p; }
};

inline Monomial random_monomial(Rng& rng, std::size_t n_vars, unsigned degree) {
    std::vector<Exponent> exps(n_vars, 0);
    for (unsigned i = 0; i < degree; ++i) exps[rng.below(static_cast<unsigned>(n_vars))] += 1;
    return Monomial(std::move(exps));
}

// Random strongly stable ideal: a union of Borel up-closures is always
// strongly stable, and degree >= 1 keeps it proper.
inline StableIdeal random_stable_ideal(Rng& rng, std::size_t n_vars, unsigned max_degree,
                                       bool positive_hilbert = false) {
    while (true) {
        std::vector<Monomial> gens;
        unsigned rounds = 1 + rng.below(3);
        for (unsigned k = 0; k < rounds; ++k) {
            unsigned d = 1 + rng.below(max_degree);
            Monomial seed = random_monomial(rng, n_vars, d);
            for (Monomial& u : monomials_of_degree(n_vars, d))
                if (borel_geq_bfs(u, seed)) gens.push_back(std::move(u));
        }
        StableIdeal J = StableIdeal(MonomialIdeal(n_vars, std::move(gens)));
        if (positive_hilbert) {
            // A pure x0 power among the generators makes N(J) finite.
            bool artinian = false;
            for (const Monomial& g : J.generators())
                if (g.max_var() == 0) artinian = true;
            if (artinian) continue;
        }
        return J;
    }
}

inline MarkedSet random_marked_set(Rng& rng, const StableIdeal& J, const RingDescriptor& ring,
                                   double density = 0.4, long coeff_bound = 3) {
    std::vector<std::tuple<Monomial, Monomial, RingElement>> tails;
    for (const Monomial& g : J.generators()) {
        for (const Monomial& beta : J.sous_escalier(g.degree())) {
            if (!rng.chance(density)) continue;
            long c = rng.range(-coeff_bound, coeff_bound);
            if (c == 0) continue;
            tails.emplace_back(g, beta, RingElement::integer(ring, c));
        }
    }
    return build_marked_set(J, ring, tails);
}

inline Poly random_homogeneous(Rng& rng, const RingDescriptor& ring, std::size_t n_vars,
                               unsigned degree, double density = 0.5, long coeff_bound = 4) {
    Poly p(ring, n_vars);
    for (const Monomial& m : monomials_of_degree(n_vars, degree)) {
        if (!rng.chance(density)) continue;
        long c = rng.range(-coeff_bound, coeff_bound);
        if (c != 0) p.add_term(m, RingElement::integer(ring, c));
    }
    return p;
}

// Span equality of two sets of degree-s polynomials over a field, decided by
// three rank computations.
inline bool same_span(const RingDescriptor& field, const std::vector<Poly>& a,
                      const std::vector<Poly>& b, std::size_t n_vars, unsigned s) {
    std::vector<Monomial> cols = verify::degree_columns(n_vars, s);
    auto matrix_of = [&](const std::vector<Poly>& polys) {
        std::vector<Poly> nonzero;
        for (const Poly& p : polys)
            if (!p.is_zero()) nonzero.push_back(p);
        return verify::ideal_slice_matrix(field, nonzero, s, cols);
    };
    std::vector<Poly> joint = a;
    joint.insert(joint.end(), b.begin(), b.end());
    unsigned ra = verify::row_space_rank(matrix_of(a));
    unsigned rb = verify::row_space_rank(matrix_of(b));
    unsigned rj = verify::row_space_rank(matrix_of(joint));
    return ra == rb && rb == rj;
}

// The paper's running example: J = (x2^2, x2*x1, x1^3) with the explicit
// marked set f002 = x2^2+3x1^2-x2x0+x1x0, f011 = x2x1-x1x0, f030 = x1^3-3x1^2x0.
inline MarkedSet example_marked_set(const RingDescriptor& ring) {
    StableIdeal J = ideal("x2^2,x2*x1,x1^3");
    std::vector<std::tuple<Monomial, Monomial, RingElement>> tails;
    auto Z = [&](long v) { return RingElement::integer(ring, v); };
    tails.emplace_back(M("x2^2"), M("x1^2"), Z(3));
    tails.emplace_back(M("x2^2"), M("x2*x0"), Z(-1));
    tails.emplace_back(M("x2^2"), M("x1*x0"), Z(1));
    tails.emplace_back(M("x2*x1"), M("x1*x0"), Z(-1));
    tails.emplace_back(M("x1^3"), M("x1^2*x0"), Z(-3));
    return build_marked_set(J, ring, tails);
}

}  // namespace mfam::testing

#endif
