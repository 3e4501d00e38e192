#include "novikov/rational.hpp"

#include <cctype>

namespace novikov {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    std::string_view digits = s;
    bool negative = false;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        negative = digits.front() == '-';
        digits.remove_prefix(1);
    }
    if (!all_digits(digits))
        throw Error(ErrorKind::Parse, "not a rational literal: '" + std::string(whole) + "'");
    mpz_class z(std::string(digits), 10);
    return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational::Rational(long long value) {
    // mpq_class has no long long constructor on every platform.
    v_ = mpq_class(mpz_class(std::to_string(value), 10));
}

Rational::Rational(long num, long den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw Error(ErrorKind::Parse, "empty rational literal");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(s.substr(0, slash), text);
        mpz_class den = parse_integer(s.substr(slash + 1), text);
        if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
        return Rational(mpq_class(num, den));
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        bool negative = !int_part.empty() && int_part.front() == '-';
        if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
        if ((int_part.empty() && frac.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
            (!frac.empty() && !all_digits(frac)))
            throw Error(ErrorKind::Parse, "not a rational literal: '" + std::string(text) + "'");
        std::string digits = std::string(int_part) + std::string(frac);
        mpz_class num(digits.empty() ? std::string("0") : digits, 10);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        if (negative) num = -num;
        return Rational(mpq_class(num, den));
    }
    return Rational(parse_integer(s, text));
}

Rational inverse(const Rational& a) { return Rational(1) / a; }

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

}  // namespace novikov
