#include "mfam/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace mfam {

namespace {

std::vector<Monomial> minimalize_vec(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), DegLexDesc{});
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> minimal;
    for (const Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& h : gens) {
            // Duplicates were removed above, so h | g with h != g is strict.
            if (h == g) continue;
            if (h.divides(g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(g);
    }
    std::sort(minimal.begin(), minimal.end(), DegLexDesc{});
    return minimal;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t n_vars, std::vector<Monomial> generators)
    : n_vars_(n_vars) {
    if (n_vars == 0) throw std::invalid_argument("variable count must be positive");
    for (const Monomial& g : generators)
        if (g.var_count() != n_vars)
            throw std::invalid_argument("generator variable count mismatch");
    gens_ = minimalize_vec(std::move(generators));
}

bool MonomialIdeal::is_proper() const {
    for (const Monomial& g : gens_)
        if (g.is_unit()) return false;
    return true;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const Monomial& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

unsigned MonomialIdeal::min_gen_degree() const {
    if (gens_.empty()) throw std::invalid_argument("zero ideal has no generators");
    unsigned d = gens_.front().degree();
    for (const Monomial& g : gens_) d = std::min(d, g.degree());
    return d;
}

unsigned MonomialIdeal::max_gen_degree() const {
    if (gens_.empty()) throw std::invalid_argument("zero ideal has no generators");
    unsigned d = 0;
    for (const Monomial& g : gens_) d = std::max(d, g.degree());
    return d;
}

std::vector<Monomial> MonomialIdeal::slice(unsigned s) const {
    std::vector<Monomial> out;
    for (Monomial& m : monomials_of_degree(n_vars_, s))
        if (contains(m)) out.push_back(std::move(m));
    return out;
}

std::vector<Monomial> MonomialIdeal::sous_escalier(unsigned s) const {
    std::vector<Monomial> out;
    for (Monomial& m : monomials_of_degree(n_vars_, s))
        if (!contains(m)) out.push_back(std::move(m));
    return out;
}

std::string MonomialIdeal::str() const {
    if (gens_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ',';
        out += gens_[i].str();
    }
    return out;
}

MonomialIdeal MonomialIdeal::parse(std::string_view text, std::size_t n_vars) {
    std::vector<Monomial> gens;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view piece =
            text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                               : comma - start);
        // Trim.
        while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front())))
            piece.remove_prefix(1);
        while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back())))
            piece.remove_suffix(1);
        if (!piece.empty() && piece != "0") gens.push_back(Monomial::parse(piece, n_vars));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return MonomialIdeal(n_vars, std::move(gens));
}

MonomialIdeal minimalize(std::size_t n_vars, std::vector<Monomial> generators) {
    return MonomialIdeal(n_vars, std::move(generators));
}

std::string StabilityViolation::message() const {
    return "not strongly stable: (x" + std::to_string(to) + "/x" + std::to_string(from) + ") * " +
           generator.str() + " = " + moved.str() + " is not in the ideal";
}

std::optional<StabilityViolation> stability_violation(const MonomialIdeal& ideal) {
    // Checking the minimal generators suffices: the exchange property
    // propagates to all multiples.
    for (const Monomial& g : ideal.generators()) {
        for (VarIndex j = 0; j < ideal.var_count(); ++j) {
            if (g[j] == 0) continue;
            for (VarIndex i = j + 1; i < ideal.var_count(); ++i) {
                Monomial moved = g / Monomial::variable(ideal.var_count(), j) *
                                 Monomial::variable(ideal.var_count(), i);
                if (!ideal.contains(moved))
                    return StabilityViolation{g, j, i, std::move(moved)};
            }
        }
    }
    return std::nullopt;
}

bool is_strongly_stable(const MonomialIdeal& ideal) {
    return !stability_violation(ideal).has_value();
}

StableIdeal::StableIdeal(MonomialIdeal ideal) : ideal_(std::move(ideal)), max_gen_degree_(0) {
    if (ideal_.is_zero()) throw std::invalid_argument("the zero ideal is not a StableIdeal");
    if (!ideal_.is_proper()) throw std::invalid_argument("the unit ideal is not a StableIdeal");
    if (auto v = stability_violation(ideal_)) throw std::invalid_argument(v->message());
    max_gen_degree_ = ideal_.max_gen_degree();
}

std::size_t StableIdeal::generator_index(const Monomial& m) const {
    const auto& gens = ideal_.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i] == m) return i;
    throw std::invalid_argument(m.str() + " is not a minimal generator");
}

StarDecomposition StableIdeal::star_decompose(const Monomial& m) const {
    if (!contains(m)) throw std::invalid_argument(m.str() + " is not in the ideal");
    // Divide out the minimal variable while the current monomial stays in
    // J \ B_J; what gets divided out accumulates into the cofactor.
    Monomial current = m;
    Monomial cofactor(var_count());
    while (true) {
        bool is_generator = false;
        for (const Monomial& g : generators())
            if (g == current) {
                is_generator = true;
                break;
            }
        if (is_generator) break;
        VarIndex j = current.min_var();
        Monomial xj = Monomial::variable(var_count(), j);
        current = current / xj;
        cofactor = cofactor * xj;
        if (!contains(current))
            throw std::logic_error("star decomposition left the ideal; ideal not strongly stable?");
    }
    return StarDecomposition{std::move(current), std::move(cofactor)};
}

StableIdeal StableIdeal::truncate(unsigned m) const {
    std::vector<Monomial> gens;
    for (const Monomial& g : generators()) {
        if (g.degree() >= m) {
            gens.push_back(g);
        } else {
            for (Monomial& cof : monomials_of_degree(var_count(), m - g.degree()))
                gens.push_back(g * cof);
        }
    }
    return StableIdeal(MonomialIdeal(var_count(), std::move(gens)));
}

bool StableIdeal::is_saturated() const {
    for (const Monomial& g : generators())
        if (g[0] > 0) return false;
    return true;
}

StableIdeal StableIdeal::saturation() const {
    std::vector<Monomial> gens;
    for (const Monomial& g : generators()) {
        std::vector<Exponent> exps = g.exponents();
        exps[0] = 0;
        gens.emplace_back(std::move(exps));
    }
    return StableIdeal(MonomialIdeal(var_count(), std::move(gens)));
}

mpz_class binomial(long top, unsigned k) {
    mpz_class num = 1;
    mpz_class den = 1;
    for (unsigned i = 1; i <= k; ++i) {
        num *= top - static_cast<long>(k) + static_cast<long>(i);
        den *= i;
    }
    return num / den;
}

mpz_class HilbertData::evaluate(long t) const {
    mpz_class v = 0;
    for (std::size_t k = 0; k < binom_coeffs.size(); ++k)
        v += binom_coeffs[k] * binomial(t + static_cast<long>(k), static_cast<unsigned>(k));
    return v;
}

unsigned HilbertData::degree() const {
    for (std::size_t k = binom_coeffs.size(); k-- > 0;)
        if (binom_coeffs[k] != 0) return static_cast<unsigned>(k);
    return 0;
}

namespace {

/// Dense polynomial in t with rational coefficients, index = power.
using TPoly = std::vector<mpq_class>;

void tpoly_trim(TPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/// C(t + shift, k) expanded in the power basis.
TPoly binomial_tpoly(long shift, unsigned k) {
    TPoly p{mpq_class(1)};
    for (unsigned i = 1; i <= k; ++i) {
        // Multiply by (t + shift - k + i).
        long c = shift - static_cast<long>(k) + static_cast<long>(i);
        TPoly q(p.size() + 1, mpq_class(0));
        for (std::size_t d = 0; d < p.size(); ++d) {
            q[d + 1] += p[d];
            q[d] += p[d] * c;
        }
        p = std::move(q);
    }
    mpz_class fact = 1;
    for (unsigned i = 2; i <= k; ++i) fact *= i;
    for (auto& c : p) c /= fact;
    tpoly_trim(p);
    return p;
}

unsigned gotzmann_of(TPoly p) {
    tpoly_trim(p);
    if (p.empty()) throw std::invalid_argument("Hilbert polynomial is zero");
    unsigned r = 0;
    long prev_a = -1;
    while (!p.empty()) {
        unsigned a = static_cast<unsigned>(p.size() - 1);
        if (p.back() < 0)
            throw std::invalid_argument("not an admissible Hilbert polynomial (negative leading term)");
        if (prev_a >= 0 && static_cast<long>(a) > prev_a)
            throw std::invalid_argument("not an admissible Hilbert polynomial (degree sequence rises)");
        prev_a = a;
        TPoly b = binomial_tpoly(static_cast<long>(a) - static_cast<long>(r), a);
        if (b.size() > p.size()) p.resize(b.size(), mpq_class(0));
        for (std::size_t d = 0; d < b.size(); ++d) p[d] -= b[d];
        ++r;
        if (r > 2000000)
            throw std::invalid_argument("not an admissible Hilbert polynomial (decomposition diverges)");
        tpoly_trim(p);
    }
    return r;
}

}  // namespace

HilbertData hilbert_data(const StableIdeal& ideal) {
    const std::size_t n_vars = ideal.var_count();
    const unsigned m = ideal.max_gen_degree();
    const std::size_t dim = n_vars;  // basis C(t+k,k), k = 0..n

    // For strongly stable J the Hilbert function of A[x]/J agrees with the
    // Hilbert polynomial from degree m on, so interpolate at s = m..m+n.
    std::vector<mpz_class> values;
    for (std::size_t j = 0; j <= dim; ++j)
        values.push_back(
            mpz_class(static_cast<unsigned long>(ideal.sous_escalier(m + static_cast<unsigned>(j)).size())));

    // Solve sum_k c_k C(s+k,k) = |N(J)_s| exactly.
    std::vector<std::vector<mpq_class>> mat(dim + 1, std::vector<mpq_class>(dim + 2));
    for (std::size_t j = 0; j <= dim; ++j) {
        for (std::size_t k = 0; k <= dim; ++k)
            mat[j][k] = mpq_class(binomial(static_cast<long>(m + j + k), static_cast<unsigned>(k)));
        mat[j][dim + 1] = mpq_class(values[j]);
    }
    for (std::size_t col = 0; col <= dim; ++col) {
        std::size_t pivot = col;
        while (pivot <= dim && mat[pivot][col] == 0) ++pivot;
        if (pivot > dim) throw std::logic_error("Hilbert interpolation matrix is singular");
        std::swap(mat[col], mat[pivot]);
        mpq_class inv = mat[col][col];
        for (auto& v : mat[col]) v /= inv;
        for (std::size_t row = 0; row <= dim; ++row) {
            if (row == col || mat[row][col] == 0) continue;
            mpq_class f = mat[row][col];
            for (std::size_t k = col; k <= dim + 1; ++k) mat[row][k] -= f * mat[col][k];
        }
    }
    HilbertData data;
    data.binom_coeffs.resize(dim + 1);
    for (std::size_t k = 0; k <= dim; ++k) {
        mpq_class c = mat[k][dim + 1];
        if (c.get_den() != 1)
            throw std::logic_error("Hilbert polynomial has non-integer binomial coordinates");
        data.binom_coeffs[k] = c.get_num();
    }
    while (!data.binom_coeffs.empty() && data.binom_coeffs.back() == 0) data.binom_coeffs.pop_back();

    // Verification point beyond the interpolation window.
    long check = static_cast<long>(m + dim + 1);
    if (data.evaluate(check) !=
        mpz_class(static_cast<unsigned long>(ideal.sous_escalier(static_cast<unsigned>(check)).size())))
        throw std::logic_error("Hilbert polynomial failed verification at degree " +
                               std::to_string(check));

    // Gotzmann number via the greedy binomial decomposition.
    TPoly p;
    for (std::size_t k = 0; k < data.binom_coeffs.size(); ++k) {
        TPoly b = binomial_tpoly(static_cast<long>(k), static_cast<unsigned>(k));
        if (b.size() > p.size()) p.resize(b.size(), mpq_class(0));
        for (std::size_t d = 0; d < b.size(); ++d) p[d] += mpq_class(data.binom_coeffs[k]) * b[d];
    }
    data.gotzmann_number = gotzmann_of(std::move(p));

    data.rho = 0;
    for (const Monomial& g : ideal.generators())
        if (g[1] > 0) data.rho = std::max(data.rho, g.degree());
    return data;
}

std::string HilbertData::polynomial_text() const {
    TPoly p;
    for (std::size_t k = 0; k < binom_coeffs.size(); ++k) {
        TPoly b = binomial_tpoly(static_cast<long>(k), static_cast<unsigned>(k));
        if (b.size() > p.size()) p.resize(b.size(), mpq_class(0));
        for (std::size_t d = 0; d < b.size(); ++d) p[d] += mpq_class(binom_coeffs[k]) * b[d];
    }
    tpoly_trim(p);
    if (p.empty()) return "0";
    std::string out;
    for (std::size_t d = p.size(); d-- > 0;) {
        if (p[d] == 0) continue;
        mpq_class c = p[d];
        bool neg = c < 0;
        if (neg) c = -c;
        if (out.empty()) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        bool unit_coeff = (c == 1) && d > 0;
        if (!unit_coeff) out += c.get_str();
        if (d > 0) {
            if (!unit_coeff) out += '*';
            out += 't';
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

}  // namespace mfam
