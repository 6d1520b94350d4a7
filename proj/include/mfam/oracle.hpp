#ifndef MFAM_ORACLE_HPP
#define MFAM_ORACLE_HPP

#include <variant>
#include <vector>

#include "mfam/marked.hpp"

/// Independent verification engine: exact linear algebra over fields on
/// degree slices of ideals. Everything here recomputes from scratch by row
/// reduction, deliberately avoiding the reduction machinery it checks.
namespace mfam::verify {

/// Coefficient matrix of a set of degree-s polynomials in a fixed column
/// order (one column per degree-s monomial).
struct DegreeMatrix {
    unsigned s;
    std::vector<Monomial> columns;
    std::vector<std::vector<RingElement>> rows;
    RingDescriptor field;
};

/// All degree-s monomials, descending DegLex.
std::vector<Monomial> degree_columns(std::size_t n_vars, unsigned s);
/// J_s first, then N(J)_s, each descending DegLex.
std::vector<Monomial> split_columns(const MonomialIdeal& ideal, unsigned s);

/// Rows spanning I_s: every degree-s monomial multiple of every generator.
DegreeMatrix ideal_slice_matrix(const RingDescriptor& field, const std::vector<Poly>& generators,
                                unsigned s, std::vector<Monomial> columns);

/// Rank by exact elimination; fraction-free (Bareiss) on integral rational
/// data, rational or prime-field Gauss otherwise.
unsigned row_space_rank(const DegreeMatrix& matrix);

/// In-place reduced row echelon form; returns the rank. Zero rows are
/// removed and pivots are scaled to 1.
unsigned rref(std::vector<std::vector<RingElement>>& rows, const RingDescriptor& field);

/// Echelon basis of I_s intersected with the span of N(J)_s.
std::vector<Poly> intersect_with_sous_escalier(const RingDescriptor& field,
                                               const std::vector<Poly>& generators,
                                               const MonomialIdeal& ideal, unsigned s);

struct SolverFailure {
    unsigned degree;
};

/// If A[x]_s = I_s + <N(J)_s> splits (checked by rank and pivot placement),
/// returns the unique (J_s)-marked set inside I_s, one row per monomial of
/// J_s. Otherwise reports the degree.
std::variant<std::vector<MarkedPolynomial>, SolverFailure> marked_rows_at_degree(
    const StableIdeal& ideal, const RingDescriptor& field, const std::vector<Poly>& generators,
    unsigned s);

/// Solves for the unique J-marked set contained in the ideal spanned by the
/// generators, checking the direct sum at each generator degree.
std::variant<std::vector<MarkedPolynomial>, SolverFailure> unique_marked_set_solver(
    const StableIdeal& ideal, const RingDescriptor& field, const std::vector<Poly>& generators);

}  // namespace mfam::verify

#endif
