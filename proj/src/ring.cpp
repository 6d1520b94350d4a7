#include "mfam/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace mfam {

namespace {

std::string tuple_str(const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.var_count(); ++i) {
        if (i) out += ',';
        out += std::to_string(m[static_cast<VarIndex>(i)]);
    }
    return out;
}

}  // namespace

ParameterVariable ParameterVariable::marked(const Monomial& head, const Monomial& tail) {
    if (head.degree() != tail.degree())
        throw std::invalid_argument("parameter head and tail monomial must have equal degree");
    ParameterVariable v;
    v.name = "C[" + tuple_str(head) + "|" + tuple_str(tail) + "]";
    v.marked_pair = std::make_pair(head, tail);
    return v;
}

ParameterVariable ParameterVariable::symbol(std::string name) {
    if (name.empty()) throw std::invalid_argument("empty parameter name");
    ParameterVariable v;
    v.name = std::move(name);
    return v;
}

std::string ParameterVariable::display() const {
    if (!marked_pair) return name;
    const auto& [head, tail] = *marked_pair;
    bool digits = true;
    for (Exponent e : head.exponents()) digits = digits && e <= 9;
    for (Exponent e : tail.exponents()) digits = digits && e <= 9;
    if (!digits) return name;
    std::string out = "C_{";
    for (Exponent e : head.exponents()) out += static_cast<char>('0' + e);
    out += ',';
    for (Exponent e : tail.exponents()) out += static_cast<char>('0' + e);
    out += '}';
    return out;
}

ParameterSet::ParameterSet(std::vector<ParameterVariable> vars) : vars_(std::move(vars)) {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i].name == vars_[j].name)
                throw std::invalid_argument("duplicate parameter name " + vars_[i].name);
}

std::optional<std::size_t> ParameterSet::find(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name || vars_[i].display() == name) return i;
    return std::nullopt;
}

bool ParameterSet::operator==(const ParameterSet& other) const {
    if (vars_.size() != other.vars_.size()) return false;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (!(vars_[i] == other.vars_[i])) return false;
    return true;
}

RingDescriptor RingDescriptor::ZZ() { return RingDescriptor(RingKind::Integers, 0, nullptr); }
RingDescriptor RingDescriptor::QQ() { return RingDescriptor(RingKind::Rationals, 0, nullptr); }

RingDescriptor RingDescriptor::Zp(const mpz_class& p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
        throw std::invalid_argument("prime field characteristic must be prime, got " + p.get_str());
    return RingDescriptor(RingKind::PrimeField, p, nullptr);
}

RingDescriptor RingDescriptor::ZC(std::shared_ptr<const ParameterSet> params) {
    if (!params) throw std::invalid_argument("parameter set must not be null");
    return RingDescriptor(RingKind::ParameterPolynomials, 0, std::move(params));
}

bool RingDescriptor::operator==(const RingDescriptor& other) const {
    if (kind_ != other.kind_) return false;
    if (kind_ == RingKind::PrimeField) return modulus_ == other.modulus_;
    if (kind_ == RingKind::ParameterPolynomials)
        return params_ == other.params_ || *params_ == *other.params_;
    return true;
}

std::string RingDescriptor::str() const {
    switch (kind_) {
        case RingKind::Integers: return "ZZ";
        case RingKind::Rationals: return "QQ";
        case RingKind::PrimeField: return "ZZ/" + modulus_.get_str();
        case RingKind::ParameterPolynomials: return "ZZ[C]";
    }
    throw std::logic_error("unknown ring kind");
}

RingDescriptor RingDescriptor::parse(std::string_view text) {
    std::string t(text);
    t.erase(std::remove_if(t.begin(), t.end(),
                           [](unsigned char c) { return std::isspace(c); }),
            t.end());
    if (t == "ZZ") return ZZ();
    if (t == "QQ") return QQ();
    if (t.rfind("ZZ/", 0) == 0) {
        mpz_class p;
        if (p.set_str(t.substr(3), 10) != 0)
            throw std::invalid_argument("bad prime field descriptor '" + std::string(text) + "'");
        return Zp(p);
    }
    throw std::invalid_argument("unknown ring descriptor '" + std::string(text) +
                                "' (expected ZZ, QQ, ZZ/p or ZZ[C])");
}

bool ParamExpsDesc::operator()(const ParamExps& a, const ParamExps& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da > db;
    // DegRevLex: greater = smaller exponent at the first differing position.
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

RingElement RingElement::zero(const RingDescriptor& ring) { return RingElement(ring); }

RingElement RingElement::one(const RingDescriptor& ring) { return integer(ring, 1); }

RingElement RingElement::integer(const RingDescriptor& ring, const mpz_class& value) {
    RingElement e(ring);
    switch (ring.kind()) {
        case RingKind::Integers: e.z_ = value; break;
        case RingKind::PrimeField: {
            mpz_class r;
            mpz_mod(r.get_mpz_t(), value.get_mpz_t(), ring.modulus().get_mpz_t());
            e.z_ = r;
            break;
        }
        case RingKind::Rationals: e.q_ = value; break;
        case RingKind::ParameterPolynomials: {
            if (value != 0) e.terms_[ParamExps(ring.params()->size(), 0)] = value;
            break;
        }
    }
    return e;
}

RingElement RingElement::rational(const RingDescriptor& ring, const mpq_class& value) {
    if (ring.kind() != RingKind::Rationals) {
        if (value.get_den() == 1) return integer(ring, value.get_num());
        throw std::invalid_argument("non-integral rational in ring " + ring.str());
    }
    RingElement e(ring);
    e.q_ = value;
    e.q_.canonicalize();
    return e;
}

RingElement RingElement::parameter(const RingDescriptor& ring, std::size_t index) {
    if (ring.kind() != RingKind::ParameterPolynomials)
        throw std::invalid_argument("ring has no parameters");
    if (index >= ring.params()->size()) throw std::invalid_argument("parameter index out of range");
    RingElement e(ring);
    ParamExps exps(ring.params()->size(), 0);
    exps[index] = 1;
    e.terms_[std::move(exps)] = 1;
    return e;
}

bool RingElement::is_zero() const {
    switch (ring_.kind()) {
        case RingKind::Integers:
        case RingKind::PrimeField: return z_ == 0;
        case RingKind::Rationals: return q_ == 0;
        case RingKind::ParameterPolynomials: return terms_.empty();
    }
    return false;
}

bool RingElement::is_one() const {
    switch (ring_.kind()) {
        case RingKind::Integers:
        case RingKind::PrimeField: return z_ == 1;
        case RingKind::Rationals: return q_ == 1;
        case RingKind::ParameterPolynomials:
            return terms_.size() == 1 && terms_.begin()->second == 1 &&
                   std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                               [](unsigned e) { return e == 0; });
    }
    return false;
}

bool RingElement::is_unit() const {
    switch (ring_.kind()) {
        case RingKind::Integers: return z_ == 1 || z_ == -1;
        case RingKind::PrimeField: return z_ != 0;
        case RingKind::Rationals: return q_ != 0;
        case RingKind::ParameterPolynomials:
            return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1) &&
                   std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                               [](unsigned e) { return e == 0; });
    }
    return false;
}

void RingElement::normalize() {
    switch (ring_.kind()) {
        case RingKind::Integers: break;
        case RingKind::PrimeField: {
            mpz_class r;
            mpz_mod(r.get_mpz_t(), z_.get_mpz_t(), ring_.modulus().get_mpz_t());
            z_ = r;
            break;
        }
        case RingKind::Rationals: q_.canonicalize(); break;
        case RingKind::ParameterPolynomials: {
            for (auto it = terms_.begin(); it != terms_.end();) {
                if (it->second == 0)
                    it = terms_.erase(it);
                else
                    ++it;
            }
            break;
        }
    }
}

namespace {

void require_same_ring(const RingDescriptor& a, const RingDescriptor& b) {
    if (a != b)
        throw std::invalid_argument("ring mismatch: " + a.str() + " vs " + b.str());
}

}  // namespace

RingElement& RingElement::operator+=(const RingElement& other) {
    require_same_ring(ring_, other.ring_);
    switch (ring_.kind()) {
        case RingKind::Integers:
        case RingKind::PrimeField: z_ += other.z_; break;
        case RingKind::Rationals: q_ += other.q_; break;
        case RingKind::ParameterPolynomials: {
            for (const auto& [exps, c] : other.terms_) {
                auto [it, fresh] = terms_.emplace(exps, c);
                if (!fresh) it->second += c;
            }
            break;
        }
    }
    normalize();
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) { return *this += -other; }

RingElement RingElement::operator+(const RingElement& other) const {
    RingElement r = *this;
    r += other;
    return r;
}

RingElement RingElement::operator-(const RingElement& other) const {
    RingElement r = *this;
    r -= other;
    return r;
}

RingElement RingElement::operator-() const {
    RingElement r = *this;
    switch (ring_.kind()) {
        case RingKind::Integers: r.z_ = -z_; break;
        case RingKind::PrimeField: r.z_ = -z_; break;
        case RingKind::Rationals: r.q_ = -q_; break;
        case RingKind::ParameterPolynomials:
            for (auto& [exps, c] : r.terms_) c = -c;
            break;
    }
    r.normalize();
    return r;
}

RingElement RingElement::operator*(const RingElement& other) const {
    require_same_ring(ring_, other.ring_);
    RingElement r(ring_);
    switch (ring_.kind()) {
        case RingKind::Integers:
        case RingKind::PrimeField: r.z_ = z_ * other.z_; break;
        case RingKind::Rationals: r.q_ = q_ * other.q_; break;
        case RingKind::ParameterPolynomials: {
            for (const auto& [ea, ca] : terms_) {
                for (const auto& [eb, cb] : other.terms_) {
                    ParamExps exps(ea);
                    for (std::size_t i = 0; i < exps.size(); ++i) exps[i] += eb[i];
                    auto [it, fresh] = r.terms_.emplace(std::move(exps), ca * cb);
                    if (!fresh) it->second += ca * cb;
                }
            }
            break;
        }
    }
    r.normalize();
    return r;
}

RingElement RingElement::inverse() const {
    if (is_zero()) throw std::invalid_argument("division by zero");
    RingElement r(ring_);
    switch (ring_.kind()) {
        case RingKind::Rationals: r.q_ = 1 / q_; return r;
        case RingKind::PrimeField: {
            mpz_class inv;
            if (mpz_invert(inv.get_mpz_t(), z_.get_mpz_t(), ring_.modulus().get_mpz_t()) == 0)
                throw std::invalid_argument("element not invertible");
            r.z_ = inv;
            return r;
        }
        default: throw std::invalid_argument("inverse requires a field, got " + ring_.str());
    }
}

RingElement RingElement::pow(unsigned e) const {
    RingElement r = one(ring_);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool RingElement::operator==(const RingElement& other) const {
    if (ring_ != other.ring_) return false;
    switch (ring_.kind()) {
        case RingKind::Integers:
        case RingKind::PrimeField: return z_ == other.z_;
        case RingKind::Rationals: return q_ == other.q_;
        case RingKind::ParameterPolynomials: return terms_ == other.terms_;
    }
    return false;
}

unsigned RingElement::total_degree() const {
    if (ring_.kind() != RingKind::ParameterPolynomials) return 0;
    unsigned d = 0;
    for (const auto& [exps, c] : terms_)
        d = std::max(d, std::accumulate(exps.begin(), exps.end(), 0u));
    return d;
}

const ParamTerms& RingElement::terms() const {
    if (ring_.kind() != RingKind::ParameterPolynomials)
        throw std::invalid_argument("not a parameter polynomial");
    return terms_;
}

const mpz_class& RingElement::integer_value() const {
    if (ring_.kind() != RingKind::Integers && ring_.kind() != RingKind::PrimeField)
        throw std::invalid_argument("not an integer-backed element");
    return z_;
}

const mpq_class& RingElement::rational_value() const {
    if (ring_.kind() != RingKind::Rationals) throw std::invalid_argument("not a rational");
    return q_;
}

std::string RingElement::str() const {
    switch (ring_.kind()) {
        case RingKind::Integers:
        case RingKind::PrimeField: return z_.get_str();
        case RingKind::Rationals: return q_.get_str();
        case RingKind::ParameterPolynomials: {
            if (terms_.empty()) return "0";
            const ParameterSet& ps = *ring_.params();
            std::string out;
            for (const auto& [exps, c] : terms_) {
                mpz_class mag = c < 0 ? mpz_class(-c) : c;
                bool neg = c < 0;
                if (out.empty()) {
                    if (neg) out += '-';
                } else {
                    out += neg ? " - " : " + ";
                }
                std::string vars;
                for (std::size_t i = 0; i < exps.size(); ++i) {
                    if (exps[i] == 0) continue;
                    if (!vars.empty()) vars += '*';
                    vars += ps.var(i).display();
                    if (exps[i] > 1) vars += "^" + std::to_string(exps[i]);
                }
                if (vars.empty()) {
                    out += mag.get_str();
                } else if (mag == 1) {
                    out += vars;
                } else {
                    out += mag.get_str() + "*" + vars;
                }
            }
            return out;
        }
    }
    throw std::logic_error("unknown ring kind");
}

namespace {

struct ElementParser {
    std::string_view text;
    std::size_t pos = 0;
    const RingDescriptor& ring;

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
        throw std::invalid_argument("cannot parse '" + std::string(text) + "': " + what);
    }

    mpz_class parse_integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            fail("expected integer");
        return mpz_class(std::string(text.substr(start, pos - start)), 10);
    }

    unsigned parse_exponent() {
        mpz_class e = parse_integer();
        if (e < 0 || e > 1000000) fail("bad exponent");
        return static_cast<unsigned>(e.get_ui());
    }

    // Parses a parameter reference: C[..|..], C_{..,..}, or a bare symbol.
    std::size_t parse_parameter() {
        skip_ws();
        std::size_t start = pos;
        if (text[pos] == 'C' && pos + 1 < text.size() &&
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
        if (name.empty()) fail("expected parameter name");
        auto idx = ring.params()->find(name);
        if (!idx) fail("unknown parameter " + name);
        return *idx;
    }

    RingElement parse_term(bool negative) {
        RingElement value = RingElement::one(ring);
        bool any_factor = false;
        bool expect_factor = true;
        while (expect_factor) {
            skip_ws();
            if (pos >= text.size()) fail("unexpected end of input");
            char c = text[pos];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                mpz_class num = parse_integer();
                skip_ws();
                if (ring.kind() == RingKind::Rationals && pos < text.size() && text[pos] == '/') {
                    ++pos;
                    mpz_class den = parse_integer();
                    if (den == 0) fail("zero denominator");
                    mpq_class q(num, den);
                    q.canonicalize();
                    value = value * RingElement::rational(ring, q);
                } else {
                    value = value * RingElement::integer(ring, num);
                }
            } else if (c == 'C' || std::isalpha(static_cast<unsigned char>(c))) {
                if (ring.kind() != RingKind::ParameterPolynomials)
                    fail("parameters not available in ring " + ring.str());
                std::size_t idx = parse_parameter();
                unsigned e = 1;
                if (eat('^')) e = parse_exponent();
                value = value * RingElement::parameter(ring, idx).pow(e);
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
            any_factor = true;
            expect_factor = eat('*');
        }
        if (!any_factor) fail("empty term");
        return negative ? -value : value;
    }

    RingElement parse_sum() {
        RingElement total = RingElement::zero(ring);
        skip_ws();
        bool negative = false;
        if (eat('-'))
            negative = true;
        else
            eat('+');
        total += parse_term(negative);
        while (true) {
            skip_ws();
            if (pos >= text.size()) break;
            if (eat('-'))
                negative = true;
            else if (eat('+'))
                negative = false;
            else
                fail("expected '+' or '-'");
            total += parse_term(negative);
        }
        return total;
    }
};

}  // namespace

RingElement RingElement::parse(const RingDescriptor& ring, std::string_view text) {
    ElementParser p{text, 0, ring};
    return p.parse_sum();
}

RingHomomorphism::RingHomomorphism(RingDescriptor source, RingDescriptor target)
    : source_(std::move(source)), target_(std::move(target)) {
    if (source_.kind() == RingKind::ParameterPolynomials)
        throw std::invalid_argument("parameter ring source needs parameter images");
}

RingHomomorphism::RingHomomorphism(RingDescriptor source, RingDescriptor target,
                                   std::vector<RingElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (source_.kind() != RingKind::ParameterPolynomials)
        throw std::invalid_argument("parameter images require a parameter ring source");
    if (images_.size() != source_.params()->size())
        throw std::invalid_argument("need one image per parameter");
    for (const RingElement& img : images_)
        if (img.ring() != target_) throw std::invalid_argument("image outside the target ring");
}

RingElement RingHomomorphism::map_integer(const mpz_class& v) const {
    return RingElement::integer(target_, v);
}

RingElement RingHomomorphism::operator()(const RingElement& e) const {
    if (e.ring() != source_) throw std::invalid_argument("element outside the source ring");
    switch (source_.kind()) {
        case RingKind::Integers: return map_integer(e.integer_value());
        case RingKind::PrimeField:
            if (target_.kind() != RingKind::PrimeField || target_.modulus() != source_.modulus())
                throw std::invalid_argument("no ring map from " + source_.str() + " to " +
                                            target_.str());
            return RingElement::integer(target_, e.integer_value());
        case RingKind::Rationals:
            if (target_.kind() != RingKind::Rationals)
                throw std::invalid_argument("no ring map from QQ to " + target_.str());
            return RingElement::rational(target_, e.rational_value());
        case RingKind::ParameterPolynomials: {
            RingElement out = RingElement::zero(target_);
            for (const auto& [exps, c] : e.terms()) {
                RingElement term = map_integer(c);
                for (std::size_t i = 0; i < exps.size(); ++i)
                    if (exps[i] > 0) term = term * images_[i].pow(exps[i]);
                out += term;
            }
            return out;
        }
    }
    throw std::logic_error("unknown ring kind");
}

}  // namespace mfam
