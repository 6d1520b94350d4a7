#ifndef MFAM_POLY_HPP
#define MFAM_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "mfam/monomial.hpp"
#include "mfam/ring.hpp"

namespace mfam {

/// Sparse polynomial in x0..xn over one of the coefficient rings. Terms are
/// kept in descending DegLex with no zero coefficients.
class Poly {
public:
    using Terms = std::map<Monomial, RingElement, DegLexDesc>;

    Poly(RingDescriptor ring, std::size_t n_vars)
        : ring_(std::move(ring)), n_vars_(n_vars) {}

    static Poly monomial(const RingDescriptor& ring, const Monomial& m,
                         const RingElement& coeff);

    const RingDescriptor& ring() const { return ring_; }
    std::size_t var_count() const { return n_vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of m (zero element if absent).
    RingElement coeff(const Monomial& m) const;
    /// Adds c * m, dropping the term if it cancels.
    void add_term(const Monomial& m, const RingElement& c);

    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator-() const;
    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly scaled(const RingElement& c) const;
    Poly times_monomial(const Monomial& m) const;

    bool operator==(const Poly& other) const;
    bool operator!=(const Poly& other) const { return !(*this == other); }

    /// Common degree of all terms, nullopt if inhomogeneous; 0 for the zero
    /// polynomial by convention.
    std::optional<unsigned> homogeneous_degree() const;

    std::string str() const;
    /// Parses forms like `-10*x1^2*x0 + x1*x0^2`, `3/4*x1`, or
    /// `(C_{011,020}^2 - C_{002,110})*x1^2*x0` depending on the ring.
    static Poly parse(const RingDescriptor& ring, std::size_t n_vars, std::string_view text);

private:
    RingDescriptor ring_;
    std::size_t n_vars_;
    Terms terms_;
};

}  // namespace mfam

#endif
