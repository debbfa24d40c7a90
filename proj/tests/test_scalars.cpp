#include <doctest.h>

#include <random>

#include "hopfcqt/error.hpp"
#include "hopfcqt/matrix.hpp"
#include "hopfcqt/scalar.hpp"

using namespace hopfcqt;

namespace {
Scalar z(long n, long j) { return Scalar::root_of_unity(n, j); }
}

TEST_CASE("field ops on roots of unity") {
  CHECK(z(3, 1) + z(3, 2) == Scalar(-1));
  CHECK(z(4, 1) * z(4, 1) == Scalar(-1));
  CHECK(Scalar::rational(1, 2).inv() == Scalar(2));
  CHECK_THROWS_AS(Scalar().inv(), DivisionByZero);
  CHECK(z(2, 1) == Scalar(-1));
  CHECK(z(1, 5) == Scalar(1));
  CHECK(z(6, 3) == Scalar(-1));
  CHECK(z(12, 4) == z(3, 1));
  CHECK(z(4, 1) * z(3, 1) == z(12, 7));
  CHECK(z(6, 1) * z(6, 1) == z(3, 1));
  CHECK((z(4, 1) + z(3, 1)) != Scalar(0));
}

TEST_CASE("inverse of non-rational values") {
  Scalar x = Scalar(1) + z(5, 2) * Scalar::rational(3, 7) - z(20, 3);
  CHECK(x * x.inv() == Scalar(1));
  Scalar y = Scalar(2) + z(3, 1);
  CHECK(y / y == Scalar(1));
}

TEST_CASE("complex embedding agrees with exact arithmetic") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> nd(1, 24), jd(-30, 30);
  for (int t = 0; t < 200; ++t) {
    Scalar a = z(nd(rng), jd(rng)) * Scalar(jd(rng)) + z(nd(rng), jd(rng));
    Scalar b = z(nd(rng), jd(rng)) + Scalar::rational(jd(rng), 7);
    auto ca = a.to_complex(), cb = b.to_complex();
    CHECK(std::abs((a * b).to_complex() - ca * cb) < 1e-9);
    CHECK(std::abs((a + b).to_complex() - (ca + cb)) < 1e-9);
    if (!b.is_zero()) CHECK(std::abs((a / b).to_complex() - ca / cb) < 1e-6);
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(11);
  const int orders[] = {1, 2, 3, 4, 5, 6, 8, 12, 24};
  std::uniform_int_distribution<int> nd(0, 8), jd(-20, 20);
  auto rnd = [&] {
    return z(orders[nd(rng)], jd(rng)) * Scalar::rational(jd(rng), 3) + z(orders[nd(rng)], jd(rng));
  };
  for (int t = 0; t < 100; ++t) {
    Scalar a = rnd(), b = rnd(), c = rnd();
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inv() == Scalar(1));
  }
}

TEST_CASE("sqrt of roots of unity") {
  CHECK(sqrt_root_of_unity(Scalar(1)) == Scalar(1));
  CHECK(sqrt_root_of_unity(Scalar(-1)) == z(4, 1));
  CHECK(sqrt_root_of_unity(z(3, 1)) == z(6, 1));
  CHECK_THROWS_AS(sqrt_root_of_unity(Scalar(2)), NotARootOfUnity);
  CHECK_THROWS_AS(sqrt_root_of_unity(Scalar(1) + z(3, 1) * Scalar(2)), NotARootOfUnity);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> nd(1, 40), jd(-100, 100);
  for (int t = 0; t < 150; ++t) {
    Scalar x = z(nd(rng), jd(rng));
    Scalar s = sqrt_root_of_unity(x);
    CHECK(s * s == x);
  }
  for (const Scalar& r : nth_roots(z(4, 1), 3)) CHECK(r.pow(3) == z(4, 1));
}

TEST_CASE("literal parsing and printing round-trip") {
  CHECK(Scalar::parse("-1/2*zeta(4,1)") == Scalar::rational(-1, 2) * z(4, 1));
  CHECK(Scalar::parse("1/2") == Scalar::rational(1, 2));
  CHECK(Scalar::parse(" zeta(3,1) + zeta(3,2)") == Scalar(-1));
  CHECK(Scalar::parse("2*(1-zeta(6,1))") == Scalar(2) - Scalar(2) * z(6, 1));
  CHECK_THROWS_AS(Scalar::parse("1/"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("zeta(0,1)"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
  for (Scalar x : {Scalar(0), Scalar::rational(-3, 4), z(12, 5) * Scalar(3) - z(4, 1), z(5, 2) + Scalar(7)})
    CHECK(Scalar::parse(x.to_string()) == x);
}

TEST_CASE("solve_linear") {
  Matrix b = Matrix::column({Scalar(1), z(3, 1)});
  auto s = solve_linear(Matrix::identity(2), b);
  CHECK(s.kind == LinearSolution::Kind::Unique);
  CHECK(s.particular == std::vector<Scalar>{Scalar(1), z(3, 1)});

  auto k = solve_linear(Matrix(2, 2), Matrix(2, 1));
  CHECK(k.kind == LinearSolution::Kind::Family);
  CHECK(k.kernel.size() == 2);

  Matrix a(2, 2);
  a.at(0, 0) = 1; a.at(0, 1) = 1; a.at(1, 0) = 1; a.at(1, 1) = -1;
  auto u = solve_linear(a, Matrix::column({Scalar(1), Scalar(0)}));
  CHECK(u.particular == std::vector<Scalar>{Scalar::rational(1, 2), Scalar::rational(1, 2)});

  Matrix c(2, 1);
  c.at(0, 0) = 1; c.at(1, 0) = 2;
  CHECK(solve_linear(c, Matrix::column({Scalar(1), Scalar(3)})).kind == LinearSolution::Kind::Inconsistent);
  CHECK_THROWS_AS(solve_linear(a, Matrix(3, 1)), DimensionMismatch);
}

TEST_CASE("solve_linear substitution reproduces b") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> small(-3, 3), nd(1, 4);
  for (int t = 0; t < 30; ++t) {
    Matrix a(3, 4);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) a.at(i, j) = Scalar(small(rng)) * z(nd(rng), small(rng));
    Matrix x(4, 1);
    for (std::size_t j = 0; j < 4; ++j) x.at(j, 0) = Scalar(small(rng));
    Matrix b = a * x;
    auto s = solve_linear(a, b);
    REQUIRE(s.kind != LinearSolution::Kind::Inconsistent);
    CHECK(a * Matrix::column(s.particular) == b);
    for (const auto& k : s.kernel) CHECK(a * Matrix::column(k) == Matrix(3, 1));
  }
}

TEST_CASE("commutant dimension") {
  CHECK(commutant_dimension({Matrix::identity(2)}, 2) == 4);
  Matrix d(2, 2), ad(2, 2);
  d.at(0, 0) = 1; d.at(1, 1) = -1;
  ad.at(0, 1) = 1; ad.at(1, 0) = 1;
  CHECK(commutant_dimension({d, ad}, 2) == 1);
  CHECK(commutant_dimension({}, 1) == 1);
  CHECK_THROWS_AS(commutant_dimension({Matrix::identity(3)}, 2), DimensionMismatch);
}
