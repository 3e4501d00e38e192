#include "novikov/rank.hpp"

namespace novikov {

namespace detail {

void normalize_row(SparseRow<Rational>& row) {
    if (row.empty()) return;
    mpz_class den_lcm = 1;
    for (const auto& [col, value] : row) {
        const mpz_class d = value.denominator();
        if (d != 1) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    mpz_class num_gcd = 0;
    std::vector<mpz_class> scaled;
    scaled.reserve(row.size());
    for (const auto& [col, value] : row) {
        mpz_class n = value.numerator() * (den_lcm / value.denominator());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        scaled.push_back(std::move(n));
    }
    if (scaled.front() < 0) num_gcd = -num_gcd;
    if (den_lcm == 1 && num_gcd == 1) return;
    for (std::size_t k = 0; k < row.size(); ++k) row[k].second = Rational(mpz_class(scaled[k] / num_gcd));
}

void normalize_row(SparseRow<NumberFieldElement>& row) {
    if (row.empty()) return;
    const NumberFieldElement& lead = row.front().second;
    if (lead == NumberFieldElement(1)) return;
    NumberFieldElement inv = nf_inverse(lead);
    for (auto& entry : row) entry.second *= inv;
}

}  // namespace detail

}  // namespace novikov
