#pragma once

#include <Eigen/Core>
#include <complex>
#include <cstdint>
#include <string>
#include <type_traits>

#include "novikov/number_field.hpp"
#include "novikov/rational.hpp"

namespace novikov {

using Index = Eigen::Index;
using ComplexFloat = std::complex<double>;

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Scalar>
inline constexpr bool is_exact_v =
    std::is_same_v<Scalar, Rational> || std::is_same_v<Scalar, NumberFieldElement>;

template <class Scalar>
inline constexpr bool is_float_v = std::is_same_v<Scalar, double> || std::is_same_v<Scalar, ComplexFloat>;

/// Scalar backend tags used in reports.
enum class Backend { Exact, NumberField, Float };

const char* to_string(Backend backend) noexcept;

template <class Scalar>
constexpr Backend backend_of() {
    if constexpr (std::is_same_v<Scalar, Rational>) return Backend::Exact;
    else if constexpr (std::is_same_v<Scalar, NumberFieldElement>) return Backend::NumberField;
    else return Backend::Float;
}

template <class Scalar>
bool is_zero(const Scalar& x) {
    if constexpr (is_exact_v<Scalar>) return x.is_zero();
    else return x == Scalar(0);
}

template <class Scalar>
Scalar multiplicative_inverse(const Scalar& x) {
    if constexpr (is_exact_v<Scalar>) return inverse(x);
    else {
        if (x == Scalar(0)) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
        return Scalar(1) / x;
    }
}

/// x^e for integer e; negative powers go through the field inverse.
template <class Scalar>
Scalar pow_int(const Scalar& x, std::int64_t e) {
    if (e < 0) return pow_int(multiplicative_inverse(x), -e);
    Scalar result(1);
    Scalar base = x;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

template <class Scalar>
std::string scalar_to_string(const Scalar& x) {
    if constexpr (is_exact_v<Scalar>) return x.str();
    else if constexpr (std::is_same_v<Scalar, double>) return std::to_string(x);
    else return std::to_string(x.real()) + (x.imag() < 0 ? "" : "+") + std::to_string(x.imag()) + "i";
}

/// Lossless promotion of exact integers/rationals into any backend.
template <class Scalar>
Scalar from_rational(const Rational& r) {
    if constexpr (std::is_same_v<Scalar, Rational>) return r;
    else if constexpr (std::is_same_v<Scalar, NumberFieldElement>) return NumberFieldElement(r);
    else return Scalar(r.to_double());
}

template <class Target>
Mat<Target> cast_rational_matrix(const Mat<Rational>& m) {
    Mat<Target> out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) out(i, j) = from_rational<Target>(m(i, j));
    return out;
}

}  // namespace novikov
