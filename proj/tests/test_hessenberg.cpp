#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fibonom/dets.hpp"
#include "fibonom/fibonacci.hpp"
#include "fibonom/fibonomial.hpp"
#include "fibonom/hessenberg.hpp"
#include "testutil.hpp"

using namespace fibonom;

namespace {

// Expand a LowerHessenberg into a dense matrix for the cofactor oracle.
std::vector<std::vector<Int>> densify(const LowerHessenberg<Int>& m) {
  const std::size_t k = m.size();
  std::vector<std::vector<Int>> full(k, std::vector<Int>(k, Int(0)));
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = 1; j <= i; ++j) full[i - 1][j - 1] = m.at(i, j);
    if (i < k) full[i - 1][i] = m.super(i);
  }
  return full;
}

}  // namespace

TEST_CASE("determinant base cases") {
  ToeplitzHessenberg<Int> empty;
  CHECK(hessenberg_det(empty) == 1);

  ToeplitzHessenberg<Int> single;
  single.column = {Int(7)};
  single.super = 1;
  CHECK(hessenberg_det(single) == 7);

  ToeplitzHessenberg<Int> two;
  two.column = {Int(2), Int(6)};
  two.super = 1;
  CHECK(hessenberg_det(two) == -2);  // 2*2 - 6, by hand
}

TEST_CASE("dense kernel matches cofactor expansion") {
  std::mt19937 eng(424242);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = 1 + eng() % 7;
    LowerHessenberg<Int> m(k);
    for (std::size_t i = 1; i <= k; ++i) {
      for (std::size_t j = 1; j <= i; ++j)
        m.at(i, j) = Int(static_cast<long>(eng() % 19) - 9);
      if (i < k) m.super(i) = Int(static_cast<long>(eng() % 19) - 9);
    }
    CHECK(hessenberg_det(m) == testutil::oracle_det(densify(m)));
  }
}

TEST_CASE("toeplitz kernel matches the dense kernel") {
  std::mt19937 eng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t k = 1 + eng() % 9;
    ToeplitzHessenberg<Int> t;
    t.super = Int(static_cast<long>(eng() % 7) - 3);
    for (std::size_t i = 0; i < k; ++i)
      t.column.push_back(Int(static_cast<long>(eng() % 19) - 9));
    LowerHessenberg<Int> m(k);
    for (std::size_t i = 1; i <= k; ++i) {
      for (std::size_t j = 1; j <= i; ++j) m.at(i, j) = t.column[i - j];
      if (i < k) m.super(i) = t.super;
    }
    CHECK(hessenberg_det(t) == hessenberg_det(m));
  }
}

TEST_CASE("column determinant route") {
  // 1x1: the determinant is F_{n+1} itself.
  for (unsigned n = 0; n <= 10; ++n)
    CHECK(fibonomial_det_column(n, 1) == fib(n + 1));
  CHECK(fibonomial_det_column(2, 2) == 2);
  CHECK(fibonomial_det_column(6, 2) == 104);
  for (unsigned n = 0; n <= 12; ++n)
    for (unsigned k = 1; k <= n + 1; ++k)
      CHECK(fibonomial_det_column(n, k) == testutil::oracle_fibonomial(n + 1, k));
}

TEST_CASE("binomial sanity determinant") {
  CHECK(binomial_det_column(1, 1) == 2);
  CHECK(binomial_det_column(2, 2) == 3);
  CHECK(binomial_det_column(4, 3) == 10);
  for (unsigned n = 0; n <= 8; ++n)
    for (unsigned k = 1; k <= 8; ++k)
      CHECK(binomial_det_column(n, k) == binomial(n + 1, k));
}

TEST_CASE("row determinant route") {
  for (unsigned n = 0; n <= 10; ++n)
    CHECK(fibonomial_det_row(n, 1) == fib(n + 1));
  CHECK(fibonomial_det_row(7, 2) == 714);
  CHECK(fibonomial_det_row(7, 4) == 582505);
  for (unsigned n = 0; n <= 12; ++n)
    for (unsigned k = 1; k <= 12; ++k)
      CHECK(fibonomial_det_row(n, k) == testutil::oracle_fibonomial(n + k, k));
}

TEST_CASE("scaled row determinant is independent of the scale") {
  CHECK(fibonomial_det_row_scaled(7, 2, Rat(1)) == 714);
  CHECK(fibonomial_det_row_scaled(2, 3, Rat(5)) == 15);
  CHECK_THROWS_AS(fibonomial_det_row_scaled(2, 2, Rat(0)),
                  std::invalid_argument);

  const std::vector<Rat> scales{Rat(1), Rat(-1), Rat(2), make_rat(Int(1), Int(3)),
                                make_rat(Int(-7), Int(2))};
  for (unsigned n = 0; n <= 10; ++n) {
    for (unsigned k = 1; k <= 10; ++k) {
      const Int want = testutil::oracle_fibonomial(n + k, k);
      for (const Rat& a : scales)
        CHECK(fibonomial_det_row_scaled(n, k, a) == want);
    }
  }
}

TEST_CASE("scale -1 reproduces the classical band") {
  auto m = fibonomial_row_scaled_matrix(3, 3, Rat(-1));
  REQUIRE(m.column.size() == 3);
  CHECK(m.column[0] == 3);
  CHECK(m.column[1] == 6);
  CHECK(m.column[2] == -3);
  CHECK(m.super == -1);
  CHECK(fibonomial_det_row_scaled(3, 3, Rat(-1)) == 60);
  // One column further the band closes with -1 and then zeros.
  auto wide = fibonomial_row_scaled_matrix(3, 5, Rat(-1));
  CHECK(wide.column[3] == -1);
  CHECK(wide.column[4] == 0);
}

TEST_CASE("inversion round trip") {
  std::vector<Rat> ones{Rat(1), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)};
  auto beta = inversion_duals(ones, 6);
  for (unsigned m = 1; m <= 6; ++m) CHECK(beta[m] == 1);
  for (const auto& e : inversion_check(ones, 6, "unit"))
    CHECK(e.status == Status::pass);

  std::vector<Rat> pow2{Rat(1), Rat(2), Rat(4), Rat(8)};
  auto beta2 = inversion_duals(pow2, 3);
  CHECK(beta2[1] == 2);
  CHECK(beta2[2] == 0);
  CHECK(beta2[3] == 0);
  for (const auto& e : inversion_check(pow2, 3, "pow2"))
    CHECK(e.status == Status::pass);

  // Triangle column n = 3: duals are the delta-signed row 4.
  std::vector<Rat> col{Rat(1)};
  for (unsigned l = 1; l <= 5; ++l)
    col.push_back(Rat(testutil::oracle_fibonomial(3 + l, 3)));
  auto beta3 = inversion_duals(col, 5);
  CHECK(beta3[1] == 3);
  CHECK(beta3[2] == -6);
  CHECK(beta3[3] == -3);
  CHECK(beta3[4] == 1);
  CHECK(beta3[5] == 0);
  for (const auto& e : inversion_check(col, 5, "column-n3"))
    CHECK(e.status == Status::pass);

  std::vector<Rat> bad{Rat(2), Rat(1)};
  CHECK_THROWS_AS(inversion_duals(bad, 1), std::invalid_argument);
}
