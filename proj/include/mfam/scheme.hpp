#ifndef MFAM_SCHEME_HPP
#define MFAM_SCHEME_HPP

#include <optional>
#include <vector>

#include "mfam/marked.hpp"

namespace mfam {

/// The generic marked family over ZZ[C]: one parameter C_{alpha,beta} per
/// generator/sous-escalier pair, and the marked set whose tails are exactly
/// those parameters, f_alpha = x^alpha + sum C_{alpha,beta} x^beta.
struct GenericFamily {
    StableIdeal ideal;
    RingDescriptor ring;  // ZZ[C]
    MarkedSet family;
};

GenericFamily generic_family(const StableIdeal& ideal);

/// One generator of the defining ideal of the marked scheme: the coefficient
/// of `residual` in the reduced EK polynomial of `pair`.
struct SchemeGenerator {
    RingElement poly;
    EKPair pair;
    Monomial residual;
};

struct SchemeEquations {
    StableIdeal ideal;
    RingDescriptor ring;  // ZZ[C]
    std::vector<SchemeGenerator> generators;
    /// Number of (pair, residual) slots before zero generators are dropped.
    std::size_t slots = 0;
};

/// Defining equations of the marked scheme inside Spec ZZ[C]: reduces every
/// EK polynomial of the generic family and collects the sous-escalier
/// coefficients of the remainders. EK pairs may be processed in parallel;
/// the output order is canonical regardless.
SchemeEquations marked_scheme_equations(const StableIdeal& ideal, unsigned jobs = 1);

/// Groebner stratum presentation: the marked scheme equations plus the
/// parameters whose tail monomial beats the head in the given term order.
struct StratumEquations {
    SchemeEquations base;
    TermOrder order;
    std::vector<ParameterVariable> vanishing_params;
};

/// Requires the ideal to be an m-truncation; throws std::invalid_argument
/// otherwise.
StratumEquations groebner_stratum_equations(const StableIdeal& ideal, TermOrder order,
                                            unsigned jobs = 1);

/// Result of the m-truncation test. `saturation` is absent in the degenerate
/// case where stripping x0 reaches the unit ideal.
struct TruncationWitness {
    bool is_truncation = false;
    std::optional<StableIdeal> saturation;
    unsigned m = 0;
};

TruncationWitness is_m_truncation(const StableIdeal& ideal);

struct EmbeddingRow {
    unsigned s;
    /// Hypothesis of the truncation-equality criterion at s: no minimal
    /// generator of degree s+1 divisible by x1, or J_{>=s-1} = J_{>=s};
    /// when it holds the marked schemes at s-1 and s coincide.
    bool equal_to_next;
    /// Open inside the Hilbert scheme iff s >= rho - 1, else locally closed.
    bool open;
};

struct EmbeddingReport {
    StableIdeal ideal;
    HilbertData hilbert;
    std::vector<EmbeddingRow> rows;
};

/// Per-degree classification for a saturated strongly stable ideal.
/// Throws std::invalid_argument if the ideal is not saturated.
EmbeddingReport embedding_report(const StableIdeal& saturated, unsigned s_lo, unsigned s_hi);
/// Default range [max(1, min generator degree - 1), Gotzmann number].
EmbeddingReport embedding_report(const StableIdeal& saturated);

/// Parameters that occur, up to sign, as single-variable generators of the
/// marked scheme ideal.
std::vector<ParameterVariable> stratum_membership_demo(const SchemeEquations& equations);
std::vector<ParameterVariable> stratum_membership_demo(const StableIdeal& ideal);

}  // namespace mfam

#endif
