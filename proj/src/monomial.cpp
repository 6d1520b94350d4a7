#include "mfam/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace mfam {

Monomial Monomial::variable(std::size_t n_vars, VarIndex i, Exponent e) {
    if (i >= n_vars) throw std::invalid_argument("variable index out of range");
    std::vector<Exponent> exps(n_vars, 0);
    exps[i] = e;
    return Monomial(std::move(exps));
}

unsigned Monomial::degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

bool Monomial::is_unit() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

VarIndex Monomial::min_var() const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0) return static_cast<VarIndex>(i);
    throw std::invalid_argument("min_var undefined for unit monomial");
}

VarIndex Monomial::max_var() const {
    for (std::size_t i = exps_.size(); i-- > 0;)
        if (exps_[i] > 0) return static_cast<VarIndex>(i);
    throw std::invalid_argument("max_var undefined for unit monomial");
}

bool Monomial::divides(const Monomial& other) const {
    if (var_count() != other.var_count())
        throw std::invalid_argument("monomials from different variable contexts");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (var_count() != other.var_count())
        throw std::invalid_argument("monomials from different variable contexts");
    std::vector<Exponent> exps(exps_);
    for (std::size_t i = 0; i < exps.size(); ++i) exps[i] += other.exps_[i];
    return Monomial(std::move(exps));
}

Monomial Monomial::operator/(const Monomial& other) const {
    if (!other.divides(*this)) throw std::invalid_argument("non-exact monomial division");
    std::vector<Exponent> exps(exps_);
    for (std::size_t i = 0; i < exps.size(); ++i) exps[i] -= other.exps_[i];
    return Monomial(std::move(exps));
}

std::string Monomial::str() const {
    std::string out;
    for (std::size_t i = exps_.size(); i-- > 0;) {
        if (exps_[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(i);
        if (exps_[i] > 1) {
            out += '^';
            out += std::to_string(exps_[i]);
        }
    }
    return out.empty() ? "1" : out;
}

namespace {

void skip_ws(std::string_view t, std::size_t& pos) {
    while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
}

unsigned parse_uint(std::string_view t, std::size_t& pos, const char* what) {
    skip_ws(t, pos);
    if (pos >= t.size() || !std::isdigit(static_cast<unsigned char>(t[pos])))
        throw std::invalid_argument(std::string("expected ") + what + " in monomial '" +
                                    std::string(t) + "'");
    unsigned long v = 0;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
        v = v * 10 + static_cast<unsigned long>(t[pos] - '0');
        if (v > 1000000) throw std::invalid_argument("number too large in monomial");
        ++pos;
    }
    return static_cast<unsigned>(v);
}

}  // namespace

Monomial Monomial::parse(std::string_view text, std::size_t n_vars) {
    std::vector<Exponent> exps(n_vars, 0);
    std::size_t pos = 0;
    skip_ws(text, pos);
    if (pos >= text.size()) throw std::invalid_argument("empty monomial");
    bool first = true;
    while (pos < text.size()) {
        skip_ws(text, pos);
        if (!first) {
            if (pos >= text.size()) break;
            if (text[pos] != '*')
                throw std::invalid_argument("expected '*' in monomial '" + std::string(text) + "'");
            ++pos;
            skip_ws(text, pos);
        }
        first = false;
        if (pos < text.size() && text[pos] == '1') {
            ++pos;
            skip_ws(text, pos);
            continue;
        }
        if (pos >= text.size() || text[pos] != 'x')
            throw std::invalid_argument("expected variable in monomial '" + std::string(text) + "'");
        ++pos;
        unsigned idx = parse_uint(text, pos, "variable index");
        if (idx >= n_vars)
            throw std::invalid_argument("variable x" + std::to_string(idx) +
                                        " out of range for " + std::to_string(n_vars) + " variables");
        unsigned e = 1;
        skip_ws(text, pos);
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            e = parse_uint(text, pos, "exponent");
        }
        exps[idx] += e;
        skip_ws(text, pos);
    }
    return Monomial(std::move(exps));
}

int compare(TermOrder order, const Monomial& a, const Monomial& b) {
    if (a.var_count() != b.var_count())
        throw std::invalid_argument("monomials from different variable contexts");
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    auto lex = [&]() {
        for (std::size_t i = ea.size(); i-- > 0;) {
            if (ea[i] != eb[i]) return ea[i] > eb[i] ? 1 : -1;
        }
        return 0;
    };
    switch (order) {
        case TermOrder::Lex:
            return lex();
        case TermOrder::DegLex: {
            unsigned da = a.degree(), db = b.degree();
            if (da != db) return da > db ? 1 : -1;
            return lex();
        }
        case TermOrder::DegRevLex: {
            unsigned da = a.degree(), db = b.degree();
            if (da != db) return da > db ? 1 : -1;
            for (std::size_t i = 0; i < ea.size(); ++i) {
                if (ea[i] != eb[i]) return ea[i] < eb[i] ? 1 : -1;
            }
            return 0;
        }
    }
    throw std::logic_error("unknown term order");
}

bool borel_geq(const Monomial& a, const Monomial& b) {
    if (a.var_count() != b.var_count())
        throw std::invalid_argument("monomials from different variable contexts");
    if (a.degree() != b.degree())
        throw std::invalid_argument("borel_geq requires equal degrees");
    long suffix_a = 0, suffix_b = 0;
    for (std::size_t i = a.var_count(); i-- > 0;) {
        suffix_a += a[static_cast<VarIndex>(i)];
        suffix_b += b[static_cast<VarIndex>(i)];
        if (suffix_a < suffix_b) return false;
    }
    return true;
}

std::vector<Monomial> monomials_of_degree(std::size_t n_vars, unsigned degree) {
    std::vector<Monomial> out;
    std::vector<Exponent> current(n_vars, 0);
    // Recursive enumeration; sorted afterwards into canonical order.
    auto rec = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
        if (var + 1 == n_vars) {
            current[var] = remaining;
            out.emplace_back(current);
            current[var] = 0;
            return;
        }
        for (unsigned e = 0; e <= remaining; ++e) {
            current[var] = e;
            self(self, var + 1, remaining - e);
        }
        current[var] = 0;
    };
    if (n_vars == 0) throw std::invalid_argument("no variables");
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), DegLexDesc{});
    return out;
}

std::string term_order_name(TermOrder o) {
    switch (o) {
        case TermOrder::Lex: return "lex";
        case TermOrder::DegLex: return "deglex";
        case TermOrder::DegRevLex: return "degrevlex";
    }
    throw std::logic_error("unknown term order");
}

TermOrder parse_term_order(std::string_view name) {
    std::string low(name);
    std::transform(low.begin(), low.end(), low.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (low == "lex") return TermOrder::Lex;
    if (low == "deglex") return TermOrder::DegLex;
    if (low == "degrevlex") return TermOrder::DegRevLex;
    throw std::invalid_argument("unknown term order '" + std::string(name) +
                                "' (expected lex, deglex or degrevlex)");
}

std::size_t hash_value(const Monomial& m) {
    std::size_t h = 1469598103934665603ull;
    for (Exponent e : m.exponents()) {
        h ^= e + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace mfam
