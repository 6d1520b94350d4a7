#ifndef MFAM_MARKED_HPP
#define MFAM_MARKED_HPP

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "mfam/ideal.hpp"
#include "mfam/poly.hpp"

namespace mfam {

/// Monic marked polynomial f = head + tail: the head term carries coefficient
/// exactly 1 and the tail holds the remaining terms with their literal
/// coefficients. Inside a marked set the head is a minimal generator and the
/// tail is supported on the sous-escalier in the same degree.
struct MarkedPolynomial {
    Monomial head;
    Poly tail;

    /// head + tail as a plain polynomial.
    Poly full() const;
    unsigned degree() const { return head.degree(); }
};

/// A J-marked set: one marked polynomial per minimal generator of J, stored
/// in the canonical generator order. Immutable after construction.
class MarkedSet {
public:
    MarkedSet(StableIdeal ideal, RingDescriptor ring, std::vector<MarkedPolynomial> polys);

    const StableIdeal& ideal() const { return ideal_; }
    const RingDescriptor& ring() const { return ring_; }
    std::size_t size() const { return polys_.size(); }
    const MarkedPolynomial& at(std::size_t i) const { return polys_[i]; }
    const std::vector<MarkedPolynomial>& polys() const { return polys_; }
    /// Index of the marked polynomial with the given head; throws if absent.
    std::size_t find(const Monomial& head) const { return ideal_.generator_index(head); }

private:
    StableIdeal ideal_;
    RingDescriptor ring_;
    std::vector<MarkedPolynomial> polys_;
};

/// Builds a marked set from tail coefficients c_{alpha,beta}; pairs not
/// listed default to zero. Every key must have alpha in B_J and beta in
/// N(J)_{|alpha|}; violations throw std::invalid_argument.
MarkedSet build_marked_set(const StableIdeal& ideal, const RingDescriptor& ring,
                           const std::vector<std::tuple<Monomial, Monomial, RingElement>>& tails);

/// The monomial marked set (all tails zero), i.e. B_J itself.
MarkedSet monomial_marked_set(const StableIdeal& ideal, const RingDescriptor& ring);

/// One multiple x^delta * f in a degree slice, keyed by its head product.
struct SliceMultiple {
    Monomial cofactor;        // x^delta
    std::size_t poly_index;   // f_alpha
    Monomial head_product;    // x^delta * x^alpha
};

/// F^(s) (v_multiples, min alpha >= max delta) and its complement F-hat^(s).
/// The heads of v_multiples enumerate J_s exactly.
struct DegreeSlice {
    unsigned s;
    std::vector<SliceMultiple> v_multiples;
    std::vector<SliceMultiple> hat_multiples;
};

DegreeSlice degree_slice(const MarkedSet& set, unsigned s);

struct ReduceStep {
    Monomial eliminated;
    std::size_t poly_index;
    Monomial cofactor;
    RingElement coefficient;
};

enum class ReduceMode { Stepwise, ViaAuxiliary };

struct ReduceOptions {
    ReduceMode mode = ReduceMode::Stepwise;
    /// Optional pick strategy: receives the J-monomials of the current
    /// support (descending DegLex) and returns the index to eliminate next.
    /// Default picks the DegLex-greatest. The remainder does not depend on
    /// the strategy; this knob exists to let tests exercise that fact.
    std::function<std::size_t(const std::vector<Monomial>&)> pick;
    std::vector<ReduceStep>* trace = nullptr;
};

/// J-remainder of a homogeneous polynomial: the unique g with
/// Supp(g) .. N(J) and h - g in the span of F^(s).
Poly reduce(const MarkedSet& set, const Poly& h);
Poly reduce(const MarkedSet& set, const Poly& h, const ReduceOptions& options);

/// The (J_s)-marked set generating the span of F^(s): one polynomial per
/// monomial of J_s, with tail supported on N(J)_s.
struct AuxiliaryBasis {
    unsigned s;
    std::vector<MarkedPolynomial> polys;  // heads = J_s, descending DegLex
    std::size_t find(const Monomial& head) const;
};

AuxiliaryBasis auxiliary_basis(const MarkedSet& set, unsigned s);

/// Eliahou-Kervaire syzygy instance: x_variable * head(base) decomposes as
/// head(partner) *_J partner_cofactor.
struct EKPair {
    std::size_t base;
    VarIndex variable;
    std::size_t partner;
    Monomial partner_cofactor;
    unsigned degree;  // of the S-polynomial
};

/// All EK pairs of the set: every f_alpha and every x_j > min(alpha).
/// Ordered by base head (descending DegLex), then ascending variable.
std::vector<EKPair> ek_pairs(const MarkedSet& set);

/// S^EK = x_j * f_base - x^nu * f_partner.
Poly ek_polynomial(const MarkedSet& set, const EKPair& pair);

/// Generators of the obstruction module N(J, I)_s: the J-remainders of the
/// elements of SF^(s), zero remainders dropped.
struct ObstructionModule {
    unsigned s;
    std::vector<Poly> generators;
};

ObstructionModule obstructions(const MarkedSet& set, unsigned s);

/// Marked-basis certificate: basis iff every EK polynomial reduces to zero;
/// the nonzero remainders are returned as witnesses.
struct BasisCertificate {
    bool basis = false;
    std::vector<std::pair<EKPair, Poly>> witnesses;
};

BasisCertificate is_marked_basis(const MarkedSet& set);

/// Degree-bound criterion: obstructions empty in every degree up to m+1.
/// Agrees with is_marked_basis on every input.
bool degree_bound_basis_test(const MarkedSet& set);

struct ExtractFailure {
    unsigned degree;  // first degree where the direct sum fails
};

/// Recovers the unique J-marked set contained in the ideal generated by the
/// given homogeneous polynomials over a field, provided
/// A[x]_s = I_s + <N(J)_s> splits in every degree up to m+1.
std::variant<MarkedSet, ExtractFailure> extract_marked_set(const StableIdeal& ideal,
                                                           const std::vector<Poly>& generators);

}  // namespace mfam

#endif
