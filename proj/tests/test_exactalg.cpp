#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ans/errors.hpp"
#include "ans/linalg.hpp"
#include "ans/scalar.hpp"

using namespace ans;

namespace {

Scalar n_of(int v) { return Scalar(Semiring::N, v); }

/// The running example's characteristic matrices: mu(a) = I, mu(b) swaps
/// the two parity states.
Matrix parity_swap() {
    Matrix m(Semiring::N, 2, 2);
    m.set(0, 1, n_of(1));
    m.set(1, 0, n_of(1));
    return m;
}

Matrix random_matrix(std::mt19937& rng, Semiring ring, std::size_t n) {
    int lo = ring == Semiring::N ? 0 : -3;
    std::uniform_int_distribution<int> entry(lo, 3);
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, Scalar(ring, entry(rng)));
    return m;
}

}  // namespace

TEST_CASE("semiring names and embedding direction") {
    CHECK(semiring_name(Semiring::N) == std::string("N"));
    CHECK(semiring_from_name("Q") == Semiring::Q);
    CHECK_THROWS_AS(semiring_from_name("R"), ParseError);
    CHECK(semiring_embeds(Semiring::N, Semiring::Q));
    CHECK(semiring_embeds(Semiring::Z, Semiring::Z));
    CHECK_FALSE(semiring_embeds(Semiring::Q, Semiring::N));
    CHECK_FALSE(semiring_embeds(Semiring::Z, Semiring::N));
}

TEST_CASE("scalar parsing and printing") {
    CHECK(Scalar::parse(Semiring::N, "0").is_zero());
    CHECK(Scalar::parse(Semiring::N, "1").is_one());
    CHECK(Scalar::parse(Semiring::Z, "-7").to_string() == "-7");
    CHECK(Scalar::parse(Semiring::Q, "22/7").to_string() == "22/7");
    CHECK(Scalar::parse(Semiring::Q, "10/4").to_string() == "5/2");   // reduced
    CHECK(Scalar::parse(Semiring::Q, "-6/4").to_string() == "-3/2");  // sign normalized
    CHECK(Scalar(Semiring::Q, Integer(6), Integer(-4)).to_string() == "-3/2");
    CHECK_THROWS_AS(Scalar::parse(Semiring::N, "-1"), SemiringError);
    CHECK_THROWS_AS(Scalar::parse(Semiring::Z, "1/2"), SemiringError);
    CHECK_THROWS_AS(Scalar::parse(Semiring::N, "abc"), ParseError);
    CHECK_THROWS_AS(Scalar(Semiring::Q, Integer(1), Integer(0)), Error);
}

TEST_CASE("scalar arithmetic respects the semiring") {
    Scalar a = Scalar::parse(Semiring::N, "3");
    Scalar b = Scalar::parse(Semiring::N, "5");
    CHECK((a + b).to_string() == "8");
    CHECK((a * b).to_string() == "15");
    CHECK_THROWS_AS(a - b, SemiringError);  // no subtraction in N
    CHECK_THROWS_AS(-a, SemiringError);
    CHECK_THROWS_AS(a / b, SemiringError);  // no division outside Q

    Scalar z = Scalar::parse(Semiring::Z, "3");
    CHECK((z - Scalar::parse(Semiring::Z, "5")).to_string() == "-2");
    CHECK_THROWS_AS(z / Scalar::parse(Semiring::Z, "2"), SemiringError);

    Scalar q = Scalar::parse(Semiring::Q, "3/4");
    CHECK((q / Scalar::parse(Semiring::Q, "3/2")).to_string() == "1/2");
    CHECK_THROWS_AS(q / Scalar::zero(Semiring::Q), Error);

    CHECK_THROWS_AS(a + z, SemiringError);  // no silent ring mixing
    CHECK_THROWS_AS(a == z, SemiringError);
}

TEST_CASE("scalar embedding widens only") {
    Scalar n = Scalar::parse(Semiring::N, "7");
    CHECK(n.embedded(Semiring::Z).ring() == Semiring::Z);
    CHECK(n.embedded(Semiring::Q).to_string() == "7");
    CHECK_THROWS_AS(Scalar::parse(Semiring::Z, "-1").embedded(Semiring::N), SemiringError);
    CHECK_THROWS_AS(Scalar::parse(Semiring::Q, "1/2").embedded(Semiring::Z), SemiringError);

    CHECK(Scalar::parse(Semiring::Q, "6/3").to_integer() == 2);
    CHECK_THROWS_AS(Scalar::parse(Semiring::Q, "1/2").to_integer(), Error);
}

TEST_CASE("identity and the parity involution") {
    Matrix i2 = Matrix::identity(Semiring::N, 2);
    Matrix swap = parity_swap();
    CHECK(i2 * swap == swap);
    CHECK(swap * i2 == swap);
    CHECK(swap * swap == i2);  // two b's restore the parity
    CHECK(swap.pow(2) == i2);
    CHECK(swap.pow(5) == swap);
    CHECK(swap.pow(0) == i2);
}

TEST_CASE("all-ones letter sum powers") {
    // sigma for the running example is the all-ones 2x2 matrix J, and
    // J^3 = 4 J (row sums double with each power).
    Matrix j(Semiring::N, 2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k) j.set(i, k, n_of(1));
    Matrix j3 = j.pow(3);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k) CHECK(j3.at(i, k) == n_of(4));
}

TEST_CASE("vector-matrix products used by the ranking recurrences") {
    RowVector lambda(Semiring::N, 2);
    lambda.set(0, n_of(1));
    RowVector moved = lambda * parity_swap();
    CHECK(moved.at(0) == n_of(0));
    CHECK(moved.at(1) == n_of(1));

    RowVector gamma(Semiring::N, 2);
    gamma.set(0, n_of(29));
    gamma.set(1, n_of(29));
    ColVector nu(Semiring::N, 2);
    nu.set(0, n_of(1));
    CHECK((gamma * nu).to_integer() == 29);

    ColVector col = parity_swap() * nu;
    CHECK(col.at(0) == n_of(0));
    CHECK(col.at(1) == n_of(1));
}

TEST_CASE("dimension and semiring guards") {
    Matrix m23(Semiring::N, 2, 3);
    Matrix m22(Semiring::N, 2, 2);
    CHECK_THROWS_AS(m23 + m22, DimensionError);
    CHECK_THROWS_AS(m22 * m23 * m23, DimensionError);
    CHECK_THROWS_AS(m23.pow(2), DimensionError);
    CHECK_THROWS_AS(m22 + Matrix(Semiring::Z, 2, 2), SemiringError);
    CHECK_THROWS_AS(m22.at(2, 0), DimensionError);
    CHECK_THROWS_AS(m22.set(0, 0, Scalar::one(Semiring::Z)), SemiringError);

    RowVector r2(Semiring::N, 2);
    RowVector r3(Semiring::N, 3);
    CHECK_THROWS_AS(r2 + r3, DimensionError);
    CHECK_THROWS_AS(r3 * m22, DimensionError);
    CHECK_THROWS_AS(r2 * ColVector(Semiring::N, 3), DimensionError);
    CHECK_THROWS_AS(r2 * ColVector(Semiring::Z, 2), SemiringError);
}

TEST_CASE("matrix embedding preserves entries") {
    Matrix m = parity_swap();
    Matrix q = m.embedded(Semiring::Q);
    CHECK(q.ring() == Semiring::Q);
    CHECK(q.at(0, 1).to_string() == "1");
    CHECK_THROWS_AS(q.embedded(Semiring::N), SemiringError);  // only widening
}

TEST_CASE("tensor product shapes and entries") {
    Matrix a(Semiring::N, 2, 2);
    a.set(0, 0, n_of(2));
    a.set(1, 1, n_of(3));
    Matrix b(Semiring::N, 3, 3);
    b.set(0, 2, n_of(5));
    Matrix t = a.tensor(b);
    CHECK(t.rows() == 6);
    CHECK(t.cols() == 6);
    CHECK(t.at(0, 2) == n_of(10));  // block (0,0) scaled by 2
    CHECK(t.at(3, 5) == n_of(15));  // block (1,1) scaled by 3
    CHECK(t.at(0, 5) == n_of(0));   // block (0,1) is zero

    RowVector u(Semiring::N, 5);
    RowVector v(Semiring::N, 2);
    CHECK(u.tensor(v).dim() == 10);  // (2k+1) * k shape of the final series
}

TEST_CASE("ring axioms hold on random matrices") {
    std::mt19937 rng(20240817);
    for (Semiring ring : {Semiring::N, Semiring::Q}) {
        for (int round = 0; round < 20; ++round) {
            Matrix a = random_matrix(rng, ring, 3);
            Matrix b = random_matrix(rng, ring, 3);
            Matrix c = random_matrix(rng, ring, 3);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a + b == b + a);
            CHECK(a.pow(2) * a.pow(3) == a.pow(5));
            // Tensor is multiplicative: (a (x) b)(a (x) b) = a^2 (x) b^2.
            CHECK(a.tensor(b) * a.tensor(b) == (a * a).tensor(b * b));
        }
    }
}

TEST_CASE("naturals stay non-negative and rationals stay reduced") {
    std::mt19937 rng(991);
    for (int round = 0; round < 10; ++round) {
        Matrix a = random_matrix(rng, Semiring::N, 4);
        Matrix b = random_matrix(rng, Semiring::N, 4);
        Matrix p = a * b + a;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                CHECK(p.at(i, j).numerator() >= 0);
                CHECK(p.at(i, j).denominator() == 1);
            }
        Matrix q = random_matrix(rng, Semiring::Q, 4);
        Matrix r = q * q;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                CHECK(boost::multiprecision::gcd(Integer(boost::multiprecision::abs(
                                                     r.at(i, j).numerator())),
                                                 r.at(i, j).denominator()) <= 1);
                CHECK(r.at(i, j).denominator() >= 1);
            }
    }
}
