#include "mfam/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace mfam::verify {

std::vector<Monomial> degree_columns(std::size_t n_vars, unsigned s) {
    return monomials_of_degree(n_vars, s);
}

std::vector<Monomial> split_columns(const MonomialIdeal& ideal, unsigned s) {
    std::vector<Monomial> cols = ideal.slice(s);
    for (Monomial& m : ideal.sous_escalier(s)) cols.push_back(std::move(m));
    return cols;
}

DegreeMatrix ideal_slice_matrix(const RingDescriptor& field, const std::vector<Poly>& generators,
                                unsigned s, std::vector<Monomial> columns) {
    if (!field.is_field())
        throw std::invalid_argument("oracle requires a field, got " + field.str());
    DegreeMatrix matrix{s, std::move(columns), {}, field};
    std::map<Monomial, std::size_t, DegLexDesc> col_index;
    for (std::size_t k = 0; k < matrix.columns.size(); ++k) col_index[matrix.columns[k]] = k;
    for (const Poly& g : generators) {
        if (g.ring() != field) throw std::invalid_argument("generator outside the oracle field");
        if (g.is_zero()) continue;
        auto deg = g.homogeneous_degree();
        if (!deg) throw std::invalid_argument("generators must be homogeneous");
        if (*deg > s) continue;
        std::size_t n_vars = g.var_count();
        for (const Monomial& cof : monomials_of_degree(n_vars, s - *deg)) {
            std::vector<RingElement> row(matrix.columns.size(), RingElement::zero(field));
            for (const auto& [m, c] : g.terms()) {
                auto it = col_index.find(m * cof);
                if (it == col_index.end()) throw std::logic_error("monomial outside column set");
                row[it->second] = c;
            }
            matrix.rows.push_back(std::move(row));
        }
    }
    return matrix;
}

unsigned rref(std::vector<std::vector<RingElement>>& rows, const RingDescriptor& field) {
    if (rows.empty()) return 0;
    const std::size_t n_cols = rows.front().size();
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < n_cols && next_row < rows.size(); ++col) {
        std::size_t pivot = next_row;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[next_row], rows[pivot]);
        RingElement inv = rows[next_row][col].inverse();
        for (std::size_t k = col; k < n_cols; ++k)
            rows[next_row][k] = rows[next_row][k] * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next_row || rows[r][col].is_zero()) continue;
            RingElement f = rows[r][col];
            for (std::size_t k = col; k < n_cols; ++k)
                rows[r][k] -= rows[next_row][k] * f;
        }
        ++next_row;
    }
    rows.resize(next_row, std::vector<RingElement>(n_cols, RingElement::zero(field)));
    return static_cast<unsigned>(next_row);
}

namespace {

// Fraction-free forward elimination; rank only.
unsigned bareiss_rank(std::vector<std::vector<mpz_class>> m) {
    if (m.empty()) return 0;
    const std::size_t n_cols = m.front().size();
    mpz_class prev_pivot = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n_cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        for (std::size_t r = row + 1; r < m.size(); ++r) {
            for (std::size_t k = col + 1; k < n_cols; ++k)
                m[r][k] = (m[r][k] * m[row][col] - m[r][col] * m[row][k]) / prev_pivot;
            m[r][col] = 0;
        }
        prev_pivot = m[row][col];
        ++row;
    }
    return static_cast<unsigned>(row);
}

}  // namespace

unsigned row_space_rank(const DegreeMatrix& matrix) {
    if (matrix.field.kind() == RingKind::Rationals) {
        bool integral = true;
        for (const auto& row : matrix.rows)
            for (const RingElement& e : row)
                if (e.rational_value().get_den() != 1) {
                    integral = false;
                    break;
                }
        if (integral) {
            std::vector<std::vector<mpz_class>> m;
            m.reserve(matrix.rows.size());
            for (const auto& row : matrix.rows) {
                std::vector<mpz_class> r;
                r.reserve(row.size());
                for (const RingElement& e : row) r.push_back(e.rational_value().get_num());
                m.push_back(std::move(r));
            }
            return bareiss_rank(std::move(m));
        }
    }
    auto rows = matrix.rows;
    return rref(rows, matrix.field);
}

std::vector<Poly> intersect_with_sous_escalier(const RingDescriptor& field,
                                               const std::vector<Poly>& generators,
                                               const MonomialIdeal& ideal, unsigned s) {
    DegreeMatrix matrix = ideal_slice_matrix(field, generators, s, split_columns(ideal, s));
    const std::size_t j_cols = ideal.slice(s).size();
    rref(matrix.rows, field);
    std::vector<Poly> basis;
    for (const auto& row : matrix.rows) {
        std::size_t lead = 0;
        while (lead < row.size() && row[lead].is_zero()) ++lead;
        if (lead < j_cols) continue;  // pivot in the ideal part
        Poly p(field, ideal.var_count());
        for (std::size_t k = lead; k < row.size(); ++k)
            if (!row[k].is_zero()) p.add_term(matrix.columns[k], row[k]);
        basis.push_back(std::move(p));
    }
    return basis;
}

std::variant<std::vector<MarkedPolynomial>, SolverFailure> marked_rows_at_degree(
    const StableIdeal& ideal, const RingDescriptor& field, const std::vector<Poly>& generators,
    unsigned s) {
    DegreeMatrix matrix =
        ideal_slice_matrix(field, generators, s, split_columns(ideal.ideal(), s));
    const std::size_t j_cols = ideal.slice(s).size();
    unsigned rank = rref(matrix.rows, field);
    if (rank != j_cols) return SolverFailure{s};
    for (const auto& row : matrix.rows) {
        std::size_t lead = 0;
        while (lead < row.size() && row[lead].is_zero()) ++lead;
        if (lead >= j_cols) return SolverFailure{s};  // nonzero intersection with <N(J)_s>
    }
    // Pivots are exactly the J_s columns; each row is x^gamma plus a tail
    // supported on N(J)_s.
    std::vector<MarkedPolynomial> rows_out;
    for (const auto& row : matrix.rows) {
        std::size_t lead = 0;
        while (row[lead].is_zero()) ++lead;
        Poly tail(field, ideal.var_count());
        for (std::size_t k = j_cols; k < row.size(); ++k)
            if (!row[k].is_zero()) tail.add_term(matrix.columns[k], row[k]);
        rows_out.push_back(MarkedPolynomial{matrix.columns[lead], std::move(tail)});
    }
    return rows_out;
}

std::variant<std::vector<MarkedPolynomial>, SolverFailure> unique_marked_set_solver(
    const StableIdeal& ideal, const RingDescriptor& field, const std::vector<Poly>& generators) {
    std::set<unsigned> degrees;
    for (const Monomial& g : ideal.generators()) degrees.insert(g.degree());
    std::vector<MarkedPolynomial> out;
    for (const Monomial& g : ideal.generators())
        out.push_back(MarkedPolynomial{g, Poly(field, ideal.var_count())});
    for (unsigned s : degrees) {
        auto solved = marked_rows_at_degree(ideal, field, generators, s);
        if (std::holds_alternative<SolverFailure>(solved))
            return std::get<SolverFailure>(solved);
        for (auto& row : std::get<std::vector<MarkedPolynomial>>(solved))
            for (std::size_t i = 0; i < out.size(); ++i)
                if (out[i].head == row.head) out[i].tail = std::move(row.tail);
    }
    return out;
}

}  // namespace mfam::verify
