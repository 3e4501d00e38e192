#include <algorithm>
#include <numeric>

#include "novikov/fixtures.hpp"
#include "support.hpp"

using namespace novikov;
using novikov::test::field;
using novikov::test::kind_of;

namespace {

// Oracle for inverses: multiply back and reduce modulo m.
NumberFieldElement times(const NumberFieldElement& a, const NumberFieldElement& b) { return a * b; }

// [I_r; U] * [I_r, V] has rank exactly r; then rows and columns are shuffled.
Mat<Rational> known_rank(Rng& rng, Index rows, Index cols, Index r, int range) {
    std::uniform_int_distribution<int> d(-range, range);
    Mat<Rational> U = Mat<Rational>::Zero(rows, r), V = Mat<Rational>::Zero(r, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < r; ++j) U(i, j) = i == j ? Rational(1) : (i < r ? Rational(0) : Rational(d(rng)));
    for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < cols; ++j) V(i, j) = i == j ? Rational(1) : (j < r ? Rational(0) : Rational(d(rng)));
    Mat<Rational> M = U * V;
    std::vector<Index> pr(static_cast<std::size_t>(rows)), pc(static_cast<std::size_t>(cols));
    std::iota(pr.begin(), pr.end(), 0);
    std::iota(pc.begin(), pc.end(), 0);
    std::shuffle(pr.begin(), pr.end(), rng);
    std::shuffle(pc.begin(), pc.end(), rng);
    Mat<Rational> out(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) out(i, j) = M(pr[static_cast<std::size_t>(i)], pc[static_cast<std::size_t>(j)]);
    return out;
}

Mat<double> to_double(const Mat<Rational>& m) {
    Mat<double> out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
    return out;
}

}  // namespace

TEST_SUITE("scalars") {

TEST_CASE("rational arithmetic is canonical") {
    CHECK(Rational(6, 8) == Rational(3, 4));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational::parse("5/7") * Rational(7) == Rational(5));
    CHECK(Rational::parse("-1.25") == Rational(-5, 4));
    CHECK(kind_of([] { return Rational(1) / Rational(0); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([] { return Rational::parse("1/x"); }) == ErrorKind::Parse);
}

TEST_CASE("nf_inverse on the golden field") {
    auto ctx = field("x^2-3*x+1");
    auto x = NumberFieldElement::generator(ctx);
    auto inv = nf_inverse(x);
    CHECK(inv == NumberFieldElement(Rational(3)) - x);
    CHECK(times(x, inv) == NumberFieldElement(1));
}

TEST_CASE("nf_inverse of one and of x mod x^2-2") {
    auto ctx = field("x^2-2");
    auto one = NumberFieldElement(ctx, {Rational(1)});
    CHECK(nf_inverse(one) == NumberFieldElement(1));
    auto x = NumberFieldElement::generator(ctx);
    CHECK(nf_inverse(x) == x * NumberFieldElement(Rational(1, 2)));
}

TEST_CASE("nf_inverse errors") {
    auto ctx = field("x^2-1");
    CHECK(kind_of([&] { return nf_inverse(NumberFieldElement(ctx, {})); }) == ErrorKind::DivisionByZero);
    // x - 1 divides x^2 - 1.
    auto a = NumberFieldElement::generator(ctx) - NumberFieldElement(1);
    CHECK(kind_of([&] { return nf_inverse(a); }) == ErrorKind::Reducibility);
    auto b = NumberFieldElement::generator(field("x^2-2"));
    auto c = NumberFieldElement::generator(field("x^2-3"));
    CHECK(kind_of([&] { return b + c; }) == ErrorKind::BackendMismatch);
}

TEST_CASE("random elements times their inverse reduce to one") {
    Rng rng(11);
    std::uniform_int_distribution<int> d(-9, 9);
    for (const char* m : {"x^2-3*x+1", "x^3-2", "x^4+x+1", "x^2+1"}) {
        auto ctx = field(m);
        const int deg = ctx->degree();
        for (int trial = 0; trial < 25; ++trial) {
            RationalPolynomial c;
            for (int k = 0; k < deg; ++k) c.push_back(Rational(d(rng), 1 + std::abs(d(rng))));
            NumberFieldElement a(ctx, c);
            if (a.is_zero()) continue;
            CHECK(a * nf_inverse(a) == NumberFieldElement(1));
        }
    }
}

TEST_CASE("rank examples") {
    CHECK(rank(Mat<Rational>(Mat<Rational>::Identity(3, 3))) == 3);
    CHECK(kernel_dim(Mat<Rational>(Mat<Rational>::Zero(2, 3))) == 3);

    Mat<Rational> nil(2, 2);
    nil << 1, 1, 0, 1;
    nil(0, 0) -= 2;
    nil(1, 1) -= 2;
    CHECK(kernel_dim(nil) == 0);

    // A_h - x I over Q[x]/(x^2-3x+1): singular but nonzero.
    auto ctx = field("x^2-3*x+1");
    auto x = NumberFieldElement::generator(ctx);
    Mat<NumberFieldElement> A(2, 2);
    A << NumberFieldElement(1) - x, NumberFieldElement(1), NumberFieldElement(1), NumberFieldElement(2) - x;
    CHECK(rank(A) == 1);
    CHECK(kernel_dim(A) == 1);
}

TEST_CASE("exact rank of constructed rank-r matrices agrees with float rank") {
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<Index> size(1, 30);
        const Index rows = size(rng), cols = size(rng);
        const Index r = std::uniform_int_distribution<Index>(0, std::min(rows, cols))(rng);
        const Mat<Rational> M = known_rank(rng, rows, cols, r, 5);
        REQUIRE(M.cwiseAbs().maxCoeff() <= Rational(1000));
        CHECK(rank(M) == r);
        CHECK(rank(to_double(M), RankMode::Float(1e-10)) == r);
    }
}

TEST_CASE("rank is transpose, permutation and row-scaling invariant") {
    Rng rng(17);
    auto ctx = field("x^2-2");
    const auto x = NumberFieldElement::generator(ctx);
    for (int trial = 0; trial < 20; ++trial) {
        const Mat<Rational> M = known_rank(rng, 7, 9, trial % 7, 4);
        const Index r = rank(M);
        CHECK(rank(Mat<Rational>(M.transpose())) == r);
        CHECK(rank(Mat<double>(to_double(M).transpose()), RankMode::Float()) == r);
        Mat<Rational> scaled = M;
        scaled.row(trial % 7) *= Rational(-3, 5);
        CHECK(rank(scaled) == r);
        Mat<Rational> swapped = M;
        swapped.col(0).swap(swapped.col(8));
        swapped.row(1).swap(swapped.row(6));
        CHECK(rank(swapped) == r);

        Mat<NumberFieldElement> N = cast_rational_matrix<NumberFieldElement>(M);
        for (Index j = 0; j < N.cols(); ++j) N(2, j) = N(2, j) * (x + NumberFieldElement(1));
        CHECK(rank(N) == r);
        CHECK(rank(Mat<NumberFieldElement>(N.transpose())) == r);
    }
}

TEST_CASE("float rank diagnostics") {
    Mat<double> M(2, 2);
    M << 1.0, 0.0, 0.0, 1e-10;
    const auto nr = numerical_rank(M, 1e-10);
    CHECK(nr.ill_conditioned);
    CHECK(kind_of([&] { return numerical_rank(M, 0.0); }) == ErrorKind::Parameter);
    CHECK(kind_of([&] { return rank(M, RankMode::Exact()); }) == ErrorKind::BackendMismatch);
    Mat<NumberFieldElement> N(1, 1);
    N(0, 0) = NumberFieldElement::generator(field("x^2-2"));
    CHECK(kind_of([&] { return rank(N, RankMode::Float()); }) == ErrorKind::BackendMismatch);
}

TEST_CASE("nullspace and solve_exact") {
    Mat<Rational> M(2, 3);
    M << 1, 2, 3, 2, 4, 6;
    const Mat<Rational> Z = nullspace(M);
    CHECK(Z.cols() == 2);
    CHECK((M * Z).isZero());
    Vec<Rational> b(2);
    b << 1, 2;
    auto sol = solve_exact(M, b);
    REQUIRE(sol);
    CHECK(M * *sol == b);
    b(1) = 3;
    CHECK_FALSE(solve_exact(M, b));
}

}  // TEST_SUITE
