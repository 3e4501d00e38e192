#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "novikov/error.hpp"

namespace novikov {

/// Exact rational number in canonical form (denominator > 0, reduced).
///
/// Thin value wrapper over mpq_class so that GMP expression templates never
/// leak into Eigen or into generic code.
class Rational {
public:
    Rational() = default;
    Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : v_(value) {}   // NOLINT(google-explicit-constructor)
    Rational(long long value);           // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }
    explicit Rational(const mpz_class& value) : v_(value) {}

    /// Parses "p/q", "p" or a finite decimal such as "-1.25".
    static Rational parse(std::string_view text);

    const mpq_class& raw() const noexcept { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_integer() const noexcept { return v_.get_den() == 1; }
    int sign() const noexcept { return sgn(v_); }
    double to_double() const { return v_.get_d(); }
    std::string str() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_;
};

Rational inverse(const Rational& a);
Rational abs(const Rational& a);

// Eigen probes these through ADL for a handful of generic kernels.
inline const Rational& conj(const Rational& x) { return x; }
inline const Rational& real(const Rational& x) { return x; }
inline Rational imag(const Rational&) { return Rational(); }
inline Rational abs2(const Rational& x) { return x * x; }

}  // namespace novikov

namespace Eigen {

template <>
struct NumTraits<novikov::Rational> : GenericNumTraits<novikov::Rational> {
    using Real = novikov::Rational;
    using NonInteger = novikov::Rational;
    using Nested = novikov::Rational;
    using Literal = novikov::Rational;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 100,
        MulCost = 100
    };

    static Real epsilon() { return Real(); }
    static Real dummy_precision() { return Real(); }
    static int digits10() { return 0; }
};

}  // namespace Eigen
