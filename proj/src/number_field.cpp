#include "novikov/number_field.hpp"

#include <cctype>
#include <sstream>

namespace novikov {

void trim(RationalPolynomial& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

RationalPolynomial poly_add(const RationalPolynomial& a, const RationalPolynomial& b) {
    RationalPolynomial r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

RationalPolynomial poly_sub(const RationalPolynomial& a, const RationalPolynomial& b) {
    RationalPolynomial r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

RationalPolynomial poly_mul(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.empty() || b.empty()) return {};
    RationalPolynomial r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

std::pair<RationalPolynomial, RationalPolynomial> poly_divmod(const RationalPolynomial& a,
                                                             const RationalPolynomial& b) {
    if (b.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    RationalPolynomial rem = a;
    trim(rem);
    if (rem.size() < b.size()) return {{}, rem};
    RationalPolynomial quo(rem.size() - b.size() + 1);
    const Rational& lead = b.back();
    while (!rem.empty() && rem.size() >= b.size()) {
        std::size_t shift = rem.size() - b.size();
        Rational factor = rem.back() / lead;
        quo[shift] = factor;
        for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] -= factor * b[j];
        rem.pop_back();  // leading term cancels exactly
        trim(rem);
    }
    trim(quo);
    return {quo, rem};
}

std::string poly_to_string(const RationalPolynomial& p, char var) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = p.size(); k-- > 0;) {
        const Rational& c = p[k];
        if (c.is_zero()) continue;
        Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? '-' : '+');
        }
        first = false;
        bool unit = mag == Rational(1);
        if (k == 0) {
            os << mag.str();
            continue;
        }
        if (!unit) os << mag.str() << '*';
        os << var;
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

namespace {

class PolynomialParser {
public:
    explicit PolynomialParser(std::string_view text) : text_(text) {}

    RationalPolynomial parse() {
        RationalPolynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorKind::Parse,
                    why + " at position " + std::to_string(pos_) + " in polynomial '" + std::string(text_) + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    RationalPolynomial expr() {
        RationalPolynomial acc = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc = poly_add(acc, term());
            } else if (c == '-') {
                ++pos_;
                acc = poly_sub(acc, term());
            } else {
                return acc;
            }
        }
    }

    RationalPolynomial term() {
        RationalPolynomial acc = unary();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = poly_mul(acc, unary());
            } else if (c == '/') {
                ++pos_;
                RationalPolynomial d = unary();
                if (d.size() > 1) fail("division by a non-constant");
                if (d.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial literal divides by zero");
                Rational inv = inverse(d[0]);
                for (auto& coeff : acc) coeff *= inv;
            } else if (c == 'x' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
                acc = poly_mul(acc, unary());  // implicit product, e.g. "3x"
            } else {
                return acc;
            }
        }
    }

    RationalPolynomial unary() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            RationalPolynomial p = unary();
            for (auto& coeff : p) coeff = -coeff;
            return p;
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    RationalPolynomial power() {
        RationalPolynomial base = primary();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
            RationalPolynomial r{Rational(1)};
            for (int i = 0; i < e; ++i) r = poly_mul(r, base);
            return r;
        }
        return base;
    }

    RationalPolynomial primary() {
        char c = peek();
        if (c == 'x') {
            ++pos_;
            return {Rational(0), Rational(1)};
        }
        if (c == '(') {
            ++pos_;
            RationalPolynomial p = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
                ++pos_;
            RationalPolynomial p{Rational::parse(text_.substr(start, pos_ - start))};
            trim(p);
            return p;
        }
        fail("expected number, 'x' or '('");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalPolynomial parse_polynomial(std::string_view text) { return PolynomialParser(text).parse(); }

MinimalPolynomial::MinimalPolynomial(RationalPolynomial coefficients) : coeffs_(std::move(coefficients)) {
    trim(coeffs_);
    if (coeffs_.size() < 2) throw Error(ErrorKind::Parameter, "minimal polynomial must have degree >= 1");
    if (coeffs_.back() != Rational(1))
        throw Error(ErrorKind::Parameter, "minimal polynomial must be monic: " + poly_to_string(coeffs_));
}

MinimalPolynomial MinimalPolynomial::parse(std::string_view text) {
    return MinimalPolynomial(parse_polynomial(text));
}

NumberFieldElement::NumberFieldElement(const Rational& value) {
    if (!value.is_zero()) c_.push_back(value);
}

NumberFieldElement::NumberFieldElement(FieldContext context, RationalPolynomial coeffs)
    : ctx_(std::move(context)), c_(std::move(coeffs)) {
    reduce();
}

NumberFieldElement NumberFieldElement::generator(const FieldContext& context) {
    return NumberFieldElement(context, {Rational(0), Rational(1)});
}

RationalPolynomial NumberFieldElement::coefficients() const {
    RationalPolynomial out = c_;
    if (ctx_) out.resize(static_cast<std::size_t>(ctx_->degree()));
    return out;
}

void NumberFieldElement::reduce() {
    trim(c_);
    if (ctx_ && c_.size() > static_cast<std::size_t>(ctx_->degree()))
        c_ = poly_divmod(c_, ctx_->coefficients()).second;
    if (!ctx_ && c_.size() > 1)
        throw Error(ErrorKind::Parameter, "non-constant number field element without a defining polynomial");
}

FieldContext NumberFieldElement::unify(const FieldContext& a, const FieldContext& b) {
    if (!a) return b;
    if (!b || a == b) return a;
    if (*a != *b)
        throw Error(ErrorKind::BackendMismatch,
                    "number field elements over different fields: " + a->str() + " vs " + b->str());
    return a;
}

NumberFieldElement NumberFieldElement::operator-() const {
    NumberFieldElement r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

NumberFieldElement& NumberFieldElement::operator+=(const NumberFieldElement& o) {
    ctx_ = unify(ctx_, o.ctx_);
    c_ = poly_add(c_, o.c_);
    return *this;
}

NumberFieldElement& NumberFieldElement::operator-=(const NumberFieldElement& o) {
    ctx_ = unify(ctx_, o.ctx_);
    c_ = poly_sub(c_, o.c_);
    return *this;
}

NumberFieldElement& NumberFieldElement::operator*=(const NumberFieldElement& o) {
    ctx_ = unify(ctx_, o.ctx_);
    c_ = poly_mul(c_, o.c_);
    reduce();
    return *this;
}

NumberFieldElement& NumberFieldElement::operator/=(const NumberFieldElement& o) { return *this *= nf_inverse(o); }

bool operator==(const NumberFieldElement& a, const NumberFieldElement& b) {
    NumberFieldElement::unify(a.ctx_, b.ctx_);
    return a.c_ == b.c_;
}

NumberFieldElement nf_inverse(const NumberFieldElement& a) {
    if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero number field element");
    if (a.c_.size() == 1) {
        RationalPolynomial c{inverse(a.c_[0])};
        NumberFieldElement r;
        r.ctx_ = a.ctx_;
        r.c_ = std::move(c);
        return r;
    }
    // Extended Euclid: track s with s*a = r (mod m).
    const RationalPolynomial& m = a.ctx_->coefficients();
    RationalPolynomial r0 = m, r1 = a.c_;
    RationalPolynomial s0, s1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, rem] = poly_divmod(r0, r1);
        RationalPolynomial s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty())
        throw Error(ErrorKind::Reducibility,
                    "element " + a.str() + " shares a factor with " + poly_to_string(m) +
                        "; defining polynomial is reducible");
    Rational scale = inverse(r1[0]);
    for (auto& c : s1) c *= scale;
    return NumberFieldElement(a.ctx_, std::move(s1));
}

FieldContext common_context(const NumberFieldElement* begin, const NumberFieldElement* end) {
    FieldContext ctx;
    for (auto it = begin; it != end; ++it) {
        const FieldContext& other = it->context();
        if (!other) continue;
        if (!ctx) {
            ctx = other;
        } else if (ctx != other && *ctx != *other) {
            throw Error(ErrorKind::BackendMismatch,
                        "matrix mixes number fields " + ctx->str() + " and " + other->str());
        }
    }
    return ctx;
}

std::complex<double> embed(const NumberFieldElement& a, std::complex<double> root) {
    std::complex<double> acc = 0.0;
    const RationalPolynomial c = a.coefficients();
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * root + c[k].to_double();
    return acc;
}

}  // namespace novikov
