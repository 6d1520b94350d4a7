#include "mfam/poly.hpp"

#include <cctype>
#include <stdexcept>

namespace mfam {

Poly Poly::monomial(const RingDescriptor& ring, const Monomial& m, const RingElement& coeff) {
    Poly p(ring, m.var_count());
    p.add_term(m, coeff);
    return p;
}

RingElement Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RingElement::zero(ring_) : it->second;
}

void Poly::add_term(const Monomial& m, const RingElement& c) {
    if (m.var_count() != n_vars_) throw std::invalid_argument("monomial variable count mismatch");
    if (c.ring() != ring_) throw std::invalid_argument("coefficient outside the polynomial ring");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& other) {
    if (other.ring_ != ring_ || other.n_vars_ != n_vars_)
        throw std::invalid_argument("polynomial ring mismatch");
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    if (other.ring_ != ring_ || other.n_vars_ != n_vars_)
        throw std::invalid_argument("polynomial ring mismatch");
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator+(const Poly& other) const {
    Poly p = *this;
    p += other;
    return p;
}

Poly Poly::operator-(const Poly& other) const {
    Poly p = *this;
    p -= other;
    return p;
}

Poly Poly::operator-() const {
    Poly p(ring_, n_vars_);
    for (const auto& [m, c] : terms_) p.add_term(m, -c);
    return p;
}

Poly Poly::scaled(const RingElement& c) const {
    Poly p(ring_, n_vars_);
    if (c.is_zero()) return p;
    for (const auto& [m, v] : terms_) p.add_term(m, v * c);
    return p;
}

Poly Poly::times_monomial(const Monomial& m) const {
    Poly p(ring_, n_vars_);
    for (const auto& [mono, c] : terms_) p.add_term(mono * m, c);
    return p;
}

bool Poly::operator==(const Poly& other) const {
    return ring_ == other.ring_ && n_vars_ == other.n_vars_ && terms_ == other.terms_;
}

std::optional<unsigned> Poly::homogeneous_degree() const {
    if (terms_.empty()) return 0u;
    unsigned d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return std::nullopt;
    return d;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        // Scalars keep their sign outside; composite coefficients go in
        // parentheses so the output re-parses unambiguously.
        bool parens = c.ring().kind() == RingKind::ParameterPolynomials;
        std::string cs = c.str();
        bool neg = false;
        if (!parens && !cs.empty() && cs[0] == '-') {
            neg = true;
            cs.erase(0, 1);
        }
        if (out.empty()) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        bool unit_coeff = !parens && cs == "1";
        std::string body;
        if (parens) {
            body = "(" + cs + ")";
        } else if (!unit_coeff) {
            body = cs;
        }
        if (!m.is_unit()) {
            if (!body.empty()) body += '*';
            body += m.str();
        } else if (body.empty()) {
            body = "1";
        }
        out += body;
    }
    return out;
}

namespace {

struct PolyParser {
    std::string_view text;
    std::size_t pos = 0;
    const RingDescriptor& ring;
    std::size_t n_vars;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("cannot parse polynomial '" + std::string(text) + "': " + what);
    }

    std::string read_number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected number");
        return std::string(text.substr(start, pos - start));
    }

    unsigned read_uint() {
        std::string n = read_number();
        if (n.size() > 6) fail("number too large");
        return static_cast<unsigned>(std::stoul(n));
    }

    // One factor of a term. Returns false if it contributed to the monomial,
    // true if it contributed to the coefficient.
    void parse_term(bool negative, Poly& acc) {
        RingElement coeff = RingElement::one(ring);
        Monomial mono(n_vars);
        bool any = false;
        while (true) {
            skip_ws();
            if (pos >= text.size()) break;
            char c = text[pos];
            if (c == '(') {
                // Parenthesized ring-element expression.
                std::size_t depth = 0;
                std::size_t start = pos;
                do {
                    if (text[pos] == '(') ++depth;
                    if (text[pos] == ')') --depth;
                    ++pos;
                    if (pos > text.size()) fail("unbalanced parentheses");
                } while (depth > 0 && pos < text.size());
                if (depth > 0) fail("unbalanced parentheses");
                std::string inner(text.substr(start + 1, pos - start - 2));
                coeff = coeff * RingElement::parse(ring, inner);
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num = read_number();
                skip_ws();
                if (ring.kind() == RingKind::Rationals && pos < text.size() && text[pos] == '/') {
                    ++pos;
                    std::string den = read_number();
                    mpq_class q{mpz_class(num), mpz_class(den)};
                    q.canonicalize();
                    coeff = coeff * RingElement::rational(ring, q);
                } else {
                    coeff = coeff * RingElement::integer(ring, mpz_class(num));
                }
            } else if (c == 'x') {
                ++pos;
                unsigned idx = read_uint();
                if (idx >= n_vars)
                    fail("variable x" + std::to_string(idx) + " out of range");
                unsigned e = 1;
                if (eat('^')) e = read_uint();
                mono = mono * Monomial::variable(n_vars, idx, e);
            } else if (c == 'C' || std::isalpha(static_cast<unsigned char>(c))) {
                if (ring.kind() != RingKind::ParameterPolynomials)
                    fail("parameters not available in ring " + ring.str());
                std::size_t start = pos;
                if (c == 'C' && pos + 1 < text.size() &&
                    (text[pos + 1] == '[' || text[pos + 1] == '_')) {
                    char close = text[pos + 1] == '[' ? ']' : '}';
                    while (pos < text.size() && text[pos] != close) ++pos;
                    if (pos >= text.size()) fail("unterminated parameter name");
                    ++pos;
                } else {
                    while (pos < text.size() &&
                           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                        ++pos;
                }
                std::string name(text.substr(start, pos - start));
                auto idx = ring.params()->find(name);
                if (!idx) fail("unknown parameter " + name);
                unsigned e = 1;
                if (eat('^')) e = read_uint();
                coeff = coeff * RingElement::parameter(ring, *idx).pow(e);
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
            any = true;
            if (!eat('*')) break;
        }
        if (!any) fail("empty term");
        if (negative) coeff = -coeff;
        acc.add_term(mono, coeff);
    }

    Poly parse() {
        Poly acc(ring, n_vars);
        skip_ws();
        if (pos >= text.size()) fail("empty input");
        bool negative = eat('-');
        if (!negative) eat('+');
        parse_term(negative, acc);
        while (true) {
            skip_ws();
            if (pos >= text.size()) break;
            if (eat('-'))
                negative = true;
            else if (eat('+'))
                negative = false;
            else
                fail("expected '+' or '-'");
            parse_term(negative, acc);
        }
        return acc;
    }
};

}  // namespace

Poly Poly::parse(const RingDescriptor& ring, std::size_t n_vars, std::string_view text) {
    PolyParser p{text, 0, ring, n_vars};
    return p.parse();
}

}  // namespace mfam
