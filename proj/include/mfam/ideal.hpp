#ifndef MFAM_IDEAL_HPP
#define MFAM_IDEAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "mfam/monomial.hpp"

namespace mfam {

/// Monomial ideal held by its minimal generating set B_J, kept sorted in
/// descending DegLex. The empty generator set is the zero ideal sentinel.
class MonomialIdeal {
public:
    /// Minimalizes (removes generators divisible by another) and sorts.
    MonomialIdeal(std::size_t n_vars, std::vector<Monomial> generators);

    static MonomialIdeal zero(std::size_t n_vars) { return MonomialIdeal(n_vars, {}); }

    std::size_t var_count() const { return n_vars_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    /// True iff 1 is not in the ideal.
    bool is_proper() const;

    bool contains(const Monomial& m) const;

    unsigned min_gen_degree() const;
    unsigned max_gen_degree() const;

    /// Monomials of J of the given degree, descending DegLex.
    std::vector<Monomial> slice(unsigned s) const;
    /// N(J)_s: degree-s monomials not in J, descending DegLex.
    std::vector<Monomial> sous_escalier(unsigned s) const;

    bool operator==(const MonomialIdeal& other) const {
        return n_vars_ == other.n_vars_ && gens_ == other.gens_;
    }

    /// Comma-separated generator list, e.g. `x2^2,x2*x1,x1^3`.
    std::string str() const;
    static MonomialIdeal parse(std::string_view text, std::size_t n_vars);

private:
    std::size_t n_vars_;
    std::vector<Monomial> gens_;
};

/// Spec operation: drop every monomial divisible by another one in the set.
MonomialIdeal minimalize(std::size_t n_vars, std::vector<Monomial> generators);

/// Witness for a failed strong-stability check: (x_to/x_from) * generator
/// is not in the ideal.
struct StabilityViolation {
    Monomial generator;
    VarIndex from;
    VarIndex to;
    Monomial moved;
    std::string message() const;
};

std::optional<StabilityViolation> stability_violation(const MonomialIdeal& ideal);
bool is_strongly_stable(const MonomialIdeal& ideal);

/// The unique factorization m = generator *_J cofactor with generator in B_J
/// and min(generator) >= max(cofactor).
struct StarDecomposition {
    Monomial generator;
    Monomial cofactor;
};

/// A validated strongly stable proper nonzero monomial ideal. All queries are
/// pure; instances are immutable and safe to share across threads.
class StableIdeal {
public:
    /// Throws std::invalid_argument if the ideal is zero, improper, or not
    /// strongly stable (the message names the violated generator move).
    explicit StableIdeal(MonomialIdeal ideal);

    static StableIdeal parse(std::string_view text, std::size_t n_vars) {
        return StableIdeal(MonomialIdeal::parse(text, n_vars));
    }

    const MonomialIdeal& ideal() const { return ideal_; }
    std::size_t var_count() const { return ideal_.var_count(); }
    const std::vector<Monomial>& generators() const { return ideal_.generators(); }
    bool contains(const Monomial& m) const { return ideal_.contains(m); }
    unsigned min_gen_degree() const { return ideal_.min_gen_degree(); }
    /// m, the maximum degree in B_J.
    unsigned max_gen_degree() const { return max_gen_degree_; }
    std::vector<Monomial> slice(unsigned s) const { return ideal_.slice(s); }
    std::vector<Monomial> sous_escalier(unsigned s) const { return ideal_.sous_escalier(s); }

    /// Index of the given generator in generators(); throws if absent.
    std::size_t generator_index(const Monomial& m) const;

    /// Throws std::invalid_argument if m is not in the ideal.
    StarDecomposition star_decompose(const Monomial& m) const;

    /// Minimal generators of J_{>=m}; strongly stable again.
    StableIdeal truncate(unsigned m) const;

    /// For strongly stable ideals: saturated iff no generator involves x0.
    bool is_saturated() const;
    /// Strip all x0 powers from the generators and minimalize.
    StableIdeal saturation() const;

    bool operator==(const StableIdeal& other) const { return ideal_ == other.ideal_; }
    std::string str() const { return ideal_.str(); }

private:
    MonomialIdeal ideal_;
    unsigned max_gen_degree_;
};

/// Hilbert polynomial of Proj(A[x]/J) in the binomial basis, its Gotzmann
/// number, and rho = max degree of a minimal generator divisible by x1.
struct HilbertData {
    /// p(t) = sum_k binom_coeffs[k] * C(t+k, k).
    std::vector<mpz_class> binom_coeffs;
    unsigned gotzmann_number = 0;
    unsigned rho = 0;

    mpz_class evaluate(long t) const;
    unsigned degree() const;
    /// Expanded form, e.g. `t + 4` or `5`; rational coefficients as `a/b`.
    std::string polynomial_text() const;
    bool operator==(const HilbertData& other) const {
        return binom_coeffs == other.binom_coeffs && gotzmann_number == other.gotzmann_number &&
               rho == other.rho;
    }
};

/// Interpolates p through |N(J)_s| at s = m..m+n, verifies at m+n+1, then
/// runs the greedy Gotzmann decomposition. Throws std::invalid_argument for
/// an eventually-zero Hilbert function and std::logic_error if interpolation
/// fails to verify.
HilbertData hilbert_data(const StableIdeal& ideal);

/// C(top, k) for integer top, as exact integer.
mpz_class binomial(long top, unsigned k);

}  // namespace mfam

#endif
