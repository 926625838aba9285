#include <doctest.h>

#include <random>

#include "unitreg/balance.hpp"

using namespace unitreg;

namespace {

FFMatrix m(std::int64_t p, int n, std::vector<std::int64_t> e) {
  return FFMatrix(p, n, n, std::move(e));
}

}  // namespace

TEST_SUITE("balance") {

TEST_CASE("balance_transform: frozen examples") {
  const auto id = balance_transform(Transformation::identity(4));
  CHECK(id.collapse == 0);
  CHECK(id.defect == 0);
  CHECK(id.semi_balanced);

  const auto r = balance_transform(Transformation({0, 0, 2, 2}));
  CHECK(r.collapse == 2);
  CHECK(r.defect == 2);
  CHECK(r.semi_balanced);
}

TEST_CASE("every transformation on a finite set is semi-balanced (n <= 5)") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> img(static_cast<std::size_t>(n), 0);
    while (true) {
      CHECK(balance_transform(Transformation(img)).semi_balanced);
      int pos = n - 1;
      while (pos >= 0 && ++img[static_cast<std::size_t>(pos)] == n) {
        img[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) {
        break;
      }
    }
  }
}

TEST_CASE("balance_linear: frozen examples") {
  const auto id = balance_linear(FFMatrix::identity(2, 2));
  CHECK(id.collapse == 0);
  CHECK(id.defect == 0);
  CHECK(id.semi_balanced);

  const auto zero = balance_linear(FFMatrix(2, 2, 2));
  CHECK(zero.collapse == 3);  // 4 points, one-point range
  CHECK(zero.defect == 3);

  const auto nil = balance_linear(m(2, 2, {0, 0, 1, 0}));
  CHECK(nil.collapse == 2);  // rank 1: 4 - 2
  CHECK(nil.defect == 2);
}

TEST_CASE("materialize uses the base-p vector indexing") {
  // Point i encodes the vector of base-p digits of i, least significant
  // digit = coordinate 0.
  const auto f = m(3, 2, {1, 1, 0, 2});
  const auto t = materialize(f);
  std::mt19937 rng(12);
  for (int round = 0; round < 50; ++round) {
    const std::vector<std::int64_t> v{static_cast<std::int64_t>(rng() % 3),
                                      static_cast<std::int64_t>(rng() % 3)};
    const auto w = apply_row(v, f);
    const int from = static_cast<int>(v[0] + 3 * v[1]);
    const int to = static_cast<int>(w[0] + 3 * w[1]);
    CHECK(t(from) == to);
  }
}

TEST_CASE("materialized_balance: frozen examples") {
  CHECK(materialize(FFMatrix(2, 2, 2)) == Transformation({0, 0, 0, 0}));

  const auto zero = materialized_balance(FFMatrix(2, 2, 2));
  CHECK(zero.collapse == 3);
  CHECK(zero.defect == 3);

  const auto nil = materialized_balance(m(2, 2, {0, 0, 1, 0}));
  CHECK(nil.collapse == 2);
  CHECK(nil.defect == 2);

  const auto id = materialized_balance(FFMatrix::identity(2, 2));
  CHECK(id.collapse == 0);
  CHECK(id.defect == 0);

  CHECK_THROWS_AS(materialized_balance(FFMatrix::identity(3, 4)), BoundExceeded);
}

TEST_CASE("formula route equals materialized route, exhaustive small fields") {
  for (std::int64_t p : {2, 3}) {
    for (int n = 1; n <= (p == 2 ? 3 : 2); ++n) {
      for_each_matrix(p, n, n, [&](const FFMatrix& f) {
        const auto lhs = balance_linear(f);
        const auto rhs = materialized_balance(f);
        REQUIRE(lhs.collapse == rhs.collapse);
        REQUIRE(lhs.defect == rhs.defect);
        REQUIRE(lhs.semi_balanced == rhs.semi_balanced);
        return true;
      });
    }
  }
}

TEST_CASE("universe scans: inclusion of unit-regulars among semi-balanced") {
  SUBCASE("proper Y: strict inclusion") {
    const auto scan = scan_universe(4, {0, 1});
    CHECK(ureg_subset_balanced(scan));
    CHECK(scan.balanced_not_ureg > 0);
    CHECK(scan.total == 64);
    CHECK(scan.semi_balanced == 64);
  }
  SUBCASE("full transformation monoid T(3): the two classes coincide") {
    const auto scan = scan_universe(3, {0, 1, 2});
    CHECK(ureg_subset_balanced(scan));
    CHECK(scan.balanced_not_ureg == 0);
    CHECK(scan.unit_regular == scan.total);
  }
  SUBCASE("proper W: strict inclusion; f = [[0,0],[1,0]] is the witness") {
    const auto scan = scan_universe(Subspace::span(FFMatrix(2, 1, 2, {1, 0})));
    CHECK(ureg_subset_balanced(scan));
    CHECK(scan.balanced_not_ureg > 0);
  }
  SUBCASE("L(V) universes: every element unit-regular") {
    for (const auto& w : {Subspace::zero(2, 2), Subspace::full(2, 2)}) {
      const auto scan = scan_universe(w);
      CHECK(ureg_subset_balanced(scan));
      CHECK(scan.balanced_not_ureg == 0);
      CHECK(scan.unit_regular == scan.total);
    }
  }
}

}  // TEST_SUITE
