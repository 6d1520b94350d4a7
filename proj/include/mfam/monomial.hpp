#ifndef MFAM_MONOMIAL_HPP
#define MFAM_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mfam {

using VarIndex = unsigned;
using Exponent = unsigned;

/// Monomial in the variables x0 < x1 < ... < xn, stored as a dense exponent
/// vector (x0 first). Immutable value type with structural equality.
class Monomial {
public:
    /// The unit monomial 1 in `n_vars` variables.
    explicit Monomial(std::size_t n_vars) : exps_(n_vars, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

    static Monomial variable(std::size_t n_vars, VarIndex i, Exponent e = 1);

    std::size_t var_count() const { return exps_.size(); }
    Exponent operator[](VarIndex i) const { return exps_[i]; }
    const std::vector<Exponent>& exponents() const { return exps_; }

    unsigned degree() const;
    bool is_unit() const;

    /// Smallest / greatest variable index with positive exponent.
    /// Throws std::invalid_argument on the unit monomial.
    VarIndex min_var() const;
    VarIndex max_var() const;

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    /// Exact division; throws std::invalid_argument unless other divides *this.
    Monomial operator/(const Monomial& other) const;

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
    bool operator!=(const Monomial& other) const { return exps_ != other.exps_; }

    /// Text form: `x2^2*x1`, unit monomial prints as `1`.
    std::string str() const;
    static Monomial parse(std::string_view text, std::size_t n_vars);

private:
    std::vector<Exponent> exps_;
};

/// Total term orders on monomials, variables ordered x0 < ... < xn.
/// Lex compares the greatest variable first. DegLex/DegRevLex compare total
/// degree first; on ties DegRevLex favours the monomial with the smaller
/// exponent on the smallest variable.
enum class TermOrder { Lex, DegLex, DegRevLex };

/// -1, 0, +1 for a <, =, > b. Throws on mismatched variable counts.
int compare(TermOrder order, const Monomial& a, const Monomial& b);

inline bool term_less(TermOrder o, const Monomial& a, const Monomial& b) {
    return compare(o, a, b) < 0;
}

/// Map comparator: descending DegLex, the canonical listing order used
/// throughout for generators, sous-escaliers and polynomial supports.
struct DegLexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return compare(TermOrder::DegLex, a, b) > 0;
    }
};

/// Borel partial order on equal-degree monomials: a >=_B b iff a is reachable
/// from b by moves x_j -> x_i with i > j. Decided by the cumulative criterion
/// sum_{k>=i} a_k >= sum_{k>=i} b_k for every i.
/// Throws std::invalid_argument on unequal degrees.
bool borel_geq(const Monomial& a, const Monomial& b);

/// All monomials of the given degree, descending DegLex.
std::vector<Monomial> monomials_of_degree(std::size_t n_vars, unsigned degree);

std::string term_order_name(TermOrder o);
TermOrder parse_term_order(std::string_view name);

std::size_t hash_value(const Monomial& m);

}  // namespace mfam

template <>
struct std::hash<mfam::Monomial> {
    std::size_t operator()(const mfam::Monomial& m) const { return mfam::hash_value(m); }
};

#endif
