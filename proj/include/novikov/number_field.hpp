#pragma once

#include <Eigen/Core>
#include <complex>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "novikov/rational.hpp"

namespace novikov {

/// Dense polynomial over the rationals, coefficients stored low degree first.
/// The zero polynomial is the empty vector; there are never trailing zeros.
using RationalPolynomial = std::vector<Rational>;

void trim(RationalPolynomial& p);
RationalPolynomial poly_add(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial poly_sub(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial poly_mul(const RationalPolynomial& a, const RationalPolynomial& b);
/// Euclidean division; returns {quotient, remainder}. Throws on a zero divisor.
std::pair<RationalPolynomial, RationalPolynomial> poly_divmod(const RationalPolynomial& a,
                                                             const RationalPolynomial& b);
std::string poly_to_string(const RationalPolynomial& p, char var = 'x');

/// Parses a polynomial in `x` with rational coefficients: "x^2-3*x+1", "3-x", "x/2", "(1/2)x".
RationalPolynomial parse_polynomial(std::string_view text);

/// Monic defining polynomial of the field Q[x]/(m). Irreducibility is the
/// caller's promise; inversion reports a reducibility error when it meets a
/// nontrivial gcd.
class MinimalPolynomial {
public:
    explicit MinimalPolynomial(RationalPolynomial coefficients);
    static MinimalPolynomial parse(std::string_view text);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const RationalPolynomial& coefficients() const { return coeffs_; }
    std::string str() const { return poly_to_string(coeffs_); }

    friend bool operator==(const MinimalPolynomial& a, const MinimalPolynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const MinimalPolynomial& a, const MinimalPolynomial& b) { return !(a == b); }

private:
    RationalPolynomial coeffs_;
};

using FieldContext = std::shared_ptr<const MinimalPolynomial>;

/// Element of Q[x]/(m).
///
/// An element without a context is a rational constant; it adopts the context
/// of the first element it is combined with. This lets Eigen's Zero() and
/// Identity() produce valid field elements. Combining two elements with
/// different defining polynomials raises a backend-mismatch error.
class NumberFieldElement {
public:
    NumberFieldElement() = default;
    NumberFieldElement(int value) : NumberFieldElement(Rational(value)) {}  // NOLINT
    NumberFieldElement(const Rational& value);                              // NOLINT
    NumberFieldElement(FieldContext context, RationalPolynomial coeffs);

    /// The class of x in Q[x]/(m).
    static NumberFieldElement generator(const FieldContext& context);

    const FieldContext& context() const { return ctx_; }
    /// Coefficients of the reduced representative, padded to deg(m) when a context is set.
    RationalPolynomial coefficients() const;
    bool is_zero() const { return c_.empty(); }
    bool is_rational() const { return c_.size() <= 1; }
    std::string str() const { return poly_to_string(c_); }

    NumberFieldElement operator-() const;
    NumberFieldElement& operator+=(const NumberFieldElement& o);
    NumberFieldElement& operator-=(const NumberFieldElement& o);
    NumberFieldElement& operator*=(const NumberFieldElement& o);
    NumberFieldElement& operator/=(const NumberFieldElement& o);

    friend NumberFieldElement operator+(NumberFieldElement a, const NumberFieldElement& b) { return a += b; }
    friend NumberFieldElement operator-(NumberFieldElement a, const NumberFieldElement& b) { return a -= b; }
    friend NumberFieldElement operator*(NumberFieldElement a, const NumberFieldElement& b) { return a *= b; }
    friend NumberFieldElement operator/(NumberFieldElement a, const NumberFieldElement& b) { return a /= b; }

    friend bool operator==(const NumberFieldElement& a, const NumberFieldElement& b);
    friend bool operator!=(const NumberFieldElement& a, const NumberFieldElement& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const NumberFieldElement& a) { return os << a.str(); }

private:
    friend NumberFieldElement nf_inverse(const NumberFieldElement& a);
    static FieldContext unify(const FieldContext& a, const FieldContext& b);
    void reduce();

    FieldContext ctx_;
    RationalPolynomial c_;  // trimmed, degree < deg(m)
};

/// Inverse modulo the defining polynomial via the extended Euclidean algorithm.
NumberFieldElement nf_inverse(const NumberFieldElement& a);
inline NumberFieldElement inverse(const NumberFieldElement& a) { return nf_inverse(a); }

/// Checks that every element lives in the same field; throws backend-mismatch otherwise.
FieldContext common_context(const NumberFieldElement* begin, const NumberFieldElement* end);

/// Evaluates the representative at a numeric root of the defining polynomial.
std::complex<double> embed(const NumberFieldElement& a, std::complex<double> root);

inline const NumberFieldElement& conj(const NumberFieldElement& x) { return x; }
inline const NumberFieldElement& real(const NumberFieldElement& x) { return x; }
inline NumberFieldElement imag(const NumberFieldElement&) { return NumberFieldElement(); }
inline NumberFieldElement abs2(const NumberFieldElement& x) { return x * x; }

}  // namespace novikov

namespace Eigen {

template <>
struct NumTraits<novikov::NumberFieldElement> : GenericNumTraits<novikov::NumberFieldElement> {
    using Real = novikov::NumberFieldElement;
    using NonInteger = novikov::NumberFieldElement;
    using Nested = novikov::NumberFieldElement;
    using Literal = novikov::NumberFieldElement;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 20,
        AddCost = 200,
        MulCost = 400
    };

    static Real epsilon() { return Real(); }
    static Real dummy_precision() { return Real(); }
    static int digits10() { return 0; }
};

}  // namespace Eigen
