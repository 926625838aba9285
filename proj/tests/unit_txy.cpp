#include <doctest.h>

#include <algorithm>
#include <set>

#include "unitreg/detail/sets.hpp"
#include "unitreg/transformation.hpp"
#include "unitreg/txy.hpp"

using namespace unitreg;

namespace {

Transformation t(std::vector<int> img) { return Transformation(std::move(img)); }

// Every transversal of ker(f) whose trace on Y is a transversal of
// ker(f|Y): each block contributes one element, drawn from P ∩ Y whenever
// the block meets Y.
std::vector<std::vector<int>> all_constrained_transversals(const InvariantSetPair& pair) {
  const auto kd = kernel_data(pair.f());
  std::vector<std::vector<int>> choices;
  for (const auto& block : kd.blocks) {
    auto in_y = detail::set_intersect(block, pair.y());
    choices.push_back(in_y.empty() ? block : in_y);
  }
  std::vector<std::vector<int>> out;
  std::vector<std::size_t> index(choices.size(), 0);
  while (true) {
    std::vector<int> transversal;
    for (std::size_t b = 0; b < choices.size(); ++b) {
      transversal.push_back(choices[b][index[b]]);
    }
    std::sort(transversal.begin(), transversal.end());
    out.push_back(std::move(transversal));
    std::size_t b = choices.size();
    while (b > 0) {
      --b;
      if (++index[b] < choices[b].size()) {
        break;
      }
      index[b] = 0;
      if (b == 0) {
        return out;
      }
    }
  }
}

}  // namespace

TEST_SUITE("txy") {

TEST_CASE("units: frozen small cases") {
  SUBCASE("n=2, Y={0}: only the identity fixes both sides") {
    const auto list = units(2, {0});
    REQUIRE(list.size() == 1);
    CHECK(list[0] == Transformation::identity(2));
  }
  SUBCASE("n=3, Y={0,1}: two permutations, lexicographic order") {
    const auto list = units(3, {0, 1});
    REQUIRE(list.size() == 2);
    CHECK(list[0] == Transformation::identity(3));
    CHECK(list[1] == t({1, 0, 2}));
  }
  SUBCASE("Y = X gives the whole symmetric group") {
    CHECK(units(3, {0, 1, 2}).size() == 6);
  }
}

TEST_CASE("units: count formula and order, all Y, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for_each_nonempty_subset(n, [&](const std::vector<int>& y) {
      const auto list = units(n, y);
      CHECK(list.size() == unit_count(n, y));
      CHECK(std::is_sorted(list.begin(), list.end(),
                           [](const Transformation& a, const Transformation& b) {
                             return a.images() < b.images();
                           }));
      for (const auto& g : list) {
        REQUIRE(is_unit(g));
        for (int p : y) {
          REQUIRE(std::binary_search(y.begin(), y.end(), g(p)));
        }
      }
    });
  }
}

TEST_CASE("check: worked examples") {
  SUBCASE("witnessed positive") {
    const auto d = check(InvariantSetPair(4, {0, 1}, t({0, 0, 2, 2})));
    CHECK(d.unit_regular);
    CHECK(d.cond_i);
    CHECK(d.cond_ii);
    CHECK(d.cond_iii);
    REQUIRE(d.witness.has_value());
  }
  SUBCASE("range condition fails") {
    const auto d = check(InvariantSetPair(4, {0, 1}, t({0, 0, 1, 3})));
    CHECK_FALSE(d.unit_regular);
    CHECK_FALSE(d.cond_ii);  // R(f|Y) = {0} but Y ∩ R(f) = {0,1}
    CHECK(d.defect_set_y == std::vector<int>{1});
    CHECK(d.defect_set == std::vector<int>{2});
    CHECK_FALSE(d.witness.has_value());
  }
  SUBCASE("identity is unit-regular with identity witness") {
    const auto d = check(InvariantSetPair(5, {1, 3}, Transformation::identity(5)));
    CHECK(d.unit_regular);
    CHECK(*d.witness == Transformation::identity(5));
  }
}

TEST_CASE("witness: worked examples") {
  SUBCASE("blockwise inverse plus order-preserving gap filling") {
    const InvariantSetPair pair(4, {0, 1}, t({0, 0, 2, 2}));
    const auto g = witness(pair);
    CHECK(g(0) == 0);  // representative of the block over 0
    CHECK(g(2) == 2);  // representative of the block over 2
    CHECK(g(1) == 1);  // D(f|Y) -> C(f|Y)
    CHECK(g(3) == 3);  // the remainders
    CHECK(verify_witness(pair, g));
  }
  SUBCASE("constant map onto the Y-singleton") {
    const InvariantSetPair pair(3, {0}, t({0, 0, 0}));
    CHECK(verify_witness(pair, witness(pair)));
  }
  SUBCASE("throws when the element is not unit-regular") {
    CHECK_THROWS_AS(witness(InvariantSetPair(4, {0, 1}, t({0, 0, 1, 3}))),
                    NotUnitRegular);
  }
}

TEST_CASE("oracle: worked examples") {
  SUBCASE("identity finds the identity first") {
    const auto g = oracle(InvariantSetPair(3, {0}, Transformation::identity(3)));
    REQUIRE(g.has_value());
    CHECK(*g == Transformation::identity(3));
  }
  SUBCASE("no unit works for the broken range condition") {
    CHECK_FALSE(oracle(InvariantSetPair(4, {0, 1}, t({0, 0, 1, 3}))).has_value());
  }
  SUBCASE("some unit works for the positive case") {
    const InvariantSetPair pair(4, {0, 1}, t({0, 0, 2, 2}));
    const auto g = oracle(pair);
    REQUIRE(g.has_value());
    CHECK(verify_witness(pair, *g));
  }
  SUBCASE("bound is enforced") {
    std::vector<int> img(9, 0);
    CHECK_THROWS_AS(oracle(InvariantSetPair(9, {0}, t(img))), BoundExceeded);
  }
}

TEST_CASE("semigroup-level unit-regularity formula") {
  CHECK(semigroup_unit_regular(4, {2}));
  CHECK(semigroup_unit_regular(4, {0, 1, 2, 3}));
  CHECK_FALSE(semigroup_unit_regular(4, {0, 1}));
}

TEST_CASE("criterion agrees with the oracle on every pair, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for_each_nonempty_subset(n, [&](const std::vector<int>& y) {
      const auto unit_list = units(n, y);
      for_each_invariant_transformation(n, y, [&](const Transformation& f) {
        const InvariantSetPair pair(n, y, f);
        const auto d = check(pair);
        const auto found = oracle_with_units(pair, unit_list);
        REQUIRE(d.unit_regular == found.has_value());

        // Positive decisions carry a valid witness.
        if (d.unit_regular) {
          REQUIRE(d.witness.has_value());
          REQUIRE(verify_witness(pair, *d.witness));
        }

        // Finite-case collapse: (ii) alone decides, and implies the rest.
        REQUIRE(d.unit_regular == d.cond_ii);
        if (d.cond_ii) {
          REQUIRE(d.cond_i);
          REQUIRE(d.cond_iii);
        }

        // When any unit works, its restriction witnesses the restriction:
        // g|Y is a unit of T(Y) and (f|Y)(g|Y)(f|Y) = f|Y.
        if (found) {
          const auto fy = restriction(pair);
          const auto gy = restriction(InvariantSetPair(n, y, *found));
          REQUIRE(is_unit(gy));
          REQUIRE(compose(compose(fy, gy), fy) == fy);
        }
      });
    });
  }
}

TEST_CASE("monoid-level formula matches the exhaustive oracle, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for_each_nonempty_subset(n, [&](const std::vector<int>& y) {
      CHECK(semigroup_unit_regular(n, y) == exhaustive_unit_regular(n, y));
    });
  }
}

TEST_CASE("range condition holds for all f exactly when |Y|=1 or Y=X") {
  // Exhaustive scan side.
  for (int n = 1; n <= 4; ++n) {
    for_each_nonempty_subset(n, [&](const std::vector<int>& y) {
      bool always = true;
      for_each_invariant_transformation(n, y, [&](const Transformation& f) {
        if (always && !check(InvariantSetPair(n, y, f)).cond_ii) {
          always = false;
        }
      });
      CHECK(always == (y.size() == 1 || static_cast<int>(y.size()) == n));
    });
  }

  // Constructed counterexample side: for |Y| >= 2 and proper Y, map Y to
  // its smallest point and everything else to the second-smallest Y-point.
  for (int n = 3; n <= 5; ++n) {
    for_each_nonempty_subset(n, [&](const std::vector<int>& y) {
      if (y.size() < 2 || static_cast<int>(y.size()) == n) {
        return;
      }
      const int a = y[0];
      const int b = y[1];
      std::vector<int> img(static_cast<std::size_t>(n), b);
      for (int p : y) {
        img[static_cast<std::size_t>(p)] = a;
      }
      const InvariantSetPair pair(n, y, t(std::move(img)));
      CHECK_FALSE(check(pair).cond_ii);
    });
  }
}

TEST_CASE("condition (iii) does not depend on the constrained transversal") {
  // The theorem fixes transversals with T_(f|Y) = Y ∩ T_f but does not say
  // which; enumerate them all and compare the (iii) verdicts.
  for (int n = 1; n <= 4; ++n) {
    for_each_nonempty_subset(n, [&](const std::vector<int>& y) {
      for_each_invariant_transformation(n, y, [&](const Transformation& f) {
        const InvariantSetPair pair(n, y, f);
        const auto d = check(pair);
        const auto defect = d.defect_set;
        const auto defect_y = d.defect_set_y;
        for (const auto& transversal : all_constrained_transversals(pair)) {
          const auto t_y = detail::set_intersect(transversal, y);
          const auto collapse = detail::set_complement(n, transversal);
          const auto collapse_y = detail::set_difference(y, t_y);
          const bool cond_iii =
              detail::set_difference(collapse, collapse_y).size() ==
              detail::set_difference(defect, defect_y).size();
          REQUIRE(cond_iii == d.cond_iii);
        }
      });
    });
  }
}

TEST_CASE("invariant transformation enumeration counts") {
  CHECK(invariant_transformation_count(4, {0, 1}) == 64);
  CHECK(invariant_transformation_count(5, {0, 1, 2, 3, 4}) == 3125);
  for (int n = 1; n <= 4; ++n) {
    for_each_nonempty_subset(n, [&](const std::vector<int>& y) {
      std::uint64_t seen = 0;
      for_each_invariant_transformation(n, y, [&](const Transformation& f) {
        ++seen;
        for (int p : y) {
          REQUIRE(std::binary_search(y.begin(), y.end(), f(p)));
        }
      });
      CHECK(seen == invariant_transformation_count(n, y));
    });
  }
}

}  // TEST_SUITE
