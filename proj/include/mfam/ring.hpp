#ifndef MFAM_RING_HPP
#define MFAM_RING_HPP

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mfam/monomial.hpp"

namespace mfam {

/// One variable of a parameter-polynomial ring. The marked kind C_{alpha,beta}
/// carries its (head, tail monomial) pair; free symbols (such as `t`) carry
/// only a name. Canonical names use x0-first exponent tuples:
/// `C[0,1,1|0,2,0]` is C with head x2*x1 and tail monomial x1^2.
struct ParameterVariable {
    std::string name;
    std::optional<std::pair<Monomial, Monomial>> marked_pair;

    static ParameterVariable marked(const Monomial& head, const Monomial& tail);
    static ParameterVariable symbol(std::string name);

    /// Paper-style subscript form `C_{011,020}` (digits x0-first) when every
    /// exponent is a single digit; falls back to the tuple form otherwise.
    std::string display() const;

    bool operator==(const ParameterVariable& other) const { return name == other.name; }
};

/// Immutable ordered set of parameter variables; the order fixes the exponent
/// positions of every ring element over it.
class ParameterSet {
public:
    explicit ParameterSet(std::vector<ParameterVariable> vars);

    std::size_t size() const { return vars_.size(); }
    const ParameterVariable& var(std::size_t i) const { return vars_[i]; }
    const std::vector<ParameterVariable>& vars() const { return vars_; }

    /// Lookup by canonical name or by the digit-subscript alias.
    std::optional<std::size_t> find(std::string_view name) const;

    bool operator==(const ParameterSet& other) const;

private:
    std::vector<ParameterVariable> vars_;
};

enum class RingKind { Integers, Rationals, PrimeField, ParameterPolynomials };

/// Descriptor of one of the supported exact coefficient rings.
class RingDescriptor {
public:
    static RingDescriptor ZZ();
    static RingDescriptor QQ();
    /// Throws unless p is prime.
    static RingDescriptor Zp(const mpz_class& p);
    static RingDescriptor ZC(std::shared_ptr<const ParameterSet> params);

    RingKind kind() const { return kind_; }
    const mpz_class& modulus() const { return modulus_; }
    const std::shared_ptr<const ParameterSet>& params() const { return params_; }
    bool is_field() const { return kind_ == RingKind::Rationals || kind_ == RingKind::PrimeField; }

    bool operator==(const RingDescriptor& other) const;
    bool operator!=(const RingDescriptor& other) const { return !(*this == other); }

    /// `ZZ`, `QQ`, `ZZ/5`, `ZZ[C]`.
    std::string str() const;
    /// Parses scalar descriptors; `ZZ[C]` needs an ideal context and is
    /// handled by the caller.
    static RingDescriptor parse(std::string_view text);

private:
    RingDescriptor(RingKind kind, mpz_class modulus, std::shared_ptr<const ParameterSet> params)
        : kind_(kind), modulus_(std::move(modulus)), params_(std::move(params)) {}

    RingKind kind_;
    mpz_class modulus_;
    std::shared_ptr<const ParameterSet> params_;
};

/// Exponent vector over a ParameterSet.
using ParamExps = std::vector<unsigned>;

/// Descending DegRevLex on parameter exponent vectors; the canonical term
/// order of ZZ[C] elements.
struct ParamExpsDesc {
    bool operator()(const ParamExps& a, const ParamExps& b) const;
};

using ParamTerms = std::map<ParamExps, mpz_class, ParamExpsDesc>;

/// Element of one of the coefficient rings. Canonical form is maintained by
/// every operation: no stored zero terms, prime-field residues in [0, p),
/// rationals fully reduced (mpq invariant).
class RingElement {
public:
    static RingElement zero(const RingDescriptor& ring);
    static RingElement one(const RingDescriptor& ring);
    /// Canonical image of an integer in the ring.
    static RingElement integer(const RingDescriptor& ring, const mpz_class& value);
    static RingElement rational(const RingDescriptor& ring, const mpq_class& value);
    /// The single parameter of the given index, as a ring element.
    static RingElement parameter(const RingDescriptor& ring, std::size_t index);

    const RingDescriptor& ring() const { return ring_; }

    bool is_zero() const;
    bool is_one() const;
    /// Units: nonzero field elements, +-1 in ZZ, +-1 constants in ZZ[C].
    bool is_unit() const;

    RingElement operator+(const RingElement& other) const;
    RingElement operator-(const RingElement& other) const;
    RingElement operator*(const RingElement& other) const;
    RingElement operator-() const;
    RingElement& operator+=(const RingElement& other);
    RingElement& operator-=(const RingElement& other);

    /// Multiplicative inverse; fields only.
    RingElement inverse() const;
    RingElement pow(unsigned e) const;

    bool operator==(const RingElement& other) const;
    bool operator!=(const RingElement& other) const { return !(*this == other); }

    /// Total degree in the parameters (0 for scalars and for 0).
    unsigned total_degree() const;
    const ParamTerms& terms() const;
    const mpz_class& integer_value() const;
    const mpq_class& rational_value() const;

    std::string str() const;
    /// Parses `-12`, `3/4`, or a parameter polynomial such as
    /// `C_{011,020}^2*C[0,0,2|0,2,0] - 2*t`.
    static RingElement parse(const RingDescriptor& ring, std::string_view text);

private:
    explicit RingElement(RingDescriptor ring) : ring_(std::move(ring)) {}
    void normalize();

    RingDescriptor ring_;
    mpz_class z_;      // Integers, PrimeField
    mpq_class q_;      // Rationals
    ParamTerms terms_; // ParameterPolynomials
};

/// Ring map determined by a base map on scalars plus one image per parameter
/// of a ZZ[C] source. Supported base maps: ZZ -> anything, QQ -> QQ,
/// ZZ/p -> ZZ/p.
class RingHomomorphism {
public:
    /// Scalar-to-scalar map with no parameter assignments.
    RingHomomorphism(RingDescriptor source, RingDescriptor target);
    /// ZZ[C] source: images indexed like the source parameter set.
    RingHomomorphism(RingDescriptor source, RingDescriptor target,
                     std::vector<RingElement> images);

    const RingDescriptor& source() const { return source_; }
    const RingDescriptor& target() const { return target_; }

    RingElement operator()(const RingElement& e) const;

private:
    RingElement map_integer(const mpz_class& v) const;

    RingDescriptor source_;
    RingDescriptor target_;
    std::vector<RingElement> images_;
};

}  // namespace mfam

#endif
