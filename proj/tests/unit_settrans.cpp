#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "unitreg/transformation.hpp"
#include "unitreg/txy.hpp"

using namespace unitreg;

namespace {

Transformation t(std::vector<int> img) { return Transformation(std::move(img)); }

// Definition-level check, independent of kernel_data's grouping: two points
// share a block iff their images agree, and the reported sets really are
// what they claim to be.
void check_kernel_definition(const Transformation& f) {
  const auto kd = kernel_data(f);
  const int n = f.size();

  std::set<int> covered;
  for (const auto& block : kd.blocks) {
    REQUIRE(!block.empty());
    for (int x : block) {
      REQUIRE(f(x) == f(block.front()));
      covered.insert(x);
    }
  }
  CHECK(static_cast<int>(covered.size()) == n);
  for (const auto& a : kd.blocks) {
    for (const auto& b : kd.blocks) {
      if (&a != &b) {
        CHECK(f(a.front()) != f(b.front()));
      }
    }
  }

  std::set<int> range(kd.range.begin(), kd.range.end());
  std::set<int> expect_range;
  for (int i = 0; i < n; ++i) {
    expect_range.insert(f(i));
  }
  CHECK(range == expect_range);

  CHECK(kd.transversal.size() == kd.blocks.size());
  CHECK(kd.blocks.size() == kd.range.size());
  CHECK(kd.collapse == n - static_cast<int>(kd.transversal.size()));
  CHECK(kd.defect == n - static_cast<int>(kd.range.size()));
}

}  // namespace

TEST_SUITE("settrans") {

TEST_CASE("kernel_data on the identity") {
  const auto kd = kernel_data(Transformation::identity(3));
  CHECK(kd.blocks == std::vector<std::vector<int>>{{0}, {1}, {2}});
  CHECK(kd.collapse == 0);
  CHECK(kd.defect == 0);
}

TEST_CASE("kernel_data of [0,0,2,2]") {
  const auto kd = kernel_data(t({0, 0, 2, 2}));
  CHECK(kd.blocks == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
  CHECK(kd.transversal == std::vector<int>{0, 2});
  CHECK(kd.range == std::vector<int>{0, 2});
  CHECK(kd.collapse == 2);
  CHECK(kd.defect == 2);
}

TEST_CASE("kernel_data of the constant map [1,1,1]") {
  const auto kd = kernel_data(t({1, 1, 1}));
  CHECK(kd.blocks == std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(kd.transversal == std::vector<int>{0});
  CHECK(kd.collapse == 2);
  CHECK(kd.defect == 2);
}

TEST_CASE("kernel invariants hold for every map on up to 6 points") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> img(static_cast<std::size_t>(n), 0);
    while (true) {
      const Transformation f(img);
      const auto kd = kernel_data(f);
      // |T_f| = |Xf| and, X being finite, collapse = defect throughout.
      REQUIRE(kd.transversal.size() == kd.range.size());
      REQUIRE(kd.collapse == kd.defect);
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

TEST_CASE("kernel_data matches the definition on random maps") {
  std::mt19937 rng(20240811);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<int> img(static_cast<std::size_t>(n));
    for (auto& v : img) {
      v = static_cast<int>(rng() % static_cast<unsigned>(n));
    }
    check_kernel_definition(t(std::move(img)));
  }
}

TEST_CASE("constrained transversal: worked examples") {
  SUBCASE("kernel block without Y-points falls back to its minimum") {
    const auto ct =
        constrained_transversal(InvariantSetPair(4, {0, 1}, t({0, 0, 2, 2})));
    CHECK(ct.t_f == std::vector<int>{0, 2});
    CHECK(ct.t_f_y == std::vector<int>{0});
  }
  SUBCASE("identity keeps everything") {
    const auto ct = constrained_transversal(
        InvariantSetPair(3, {0, 1, 2}, Transformation::identity(3)));
    CHECK(ct.t_f == std::vector<int>{0, 1, 2});
    CHECK(ct.t_f_y == std::vector<int>{0, 1, 2});
  }
  SUBCASE("single block meeting Y takes its smallest Y-point") {
    const auto ct =
        constrained_transversal(InvariantSetPair(4, {0, 1}, t({1, 1, 1, 1})));
    CHECK(ct.t_f == std::vector<int>{0});
    CHECK(ct.t_f_y == std::vector<int>{0});
  }
}

TEST_CASE("constrained transversal properties across all pairs, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for_each_nonempty_subset(n, [&](const std::vector<int>& y) {
      for_each_invariant_transformation(n, y, [&](const Transformation& f) {
        const InvariantSetPair pair(n, y, f);
        const auto ct = constrained_transversal(pair);
        const auto kd = kernel_data(f);

        // Exactly one representative per kernel block.
        REQUIRE(ct.t_f.size() == kd.blocks.size());
        for (const auto& block : kd.blocks) {
          int hits = 0;
          for (int x : block) {
            hits += std::binary_search(ct.t_f.begin(), ct.t_f.end(), x);
          }
          REQUIRE(hits == 1);
        }

        // The trace on Y is a transversal of ker(f|Y): one representative
        // inside each block that meets Y, none elsewhere.
        std::size_t blocks_meeting_y = 0;
        for (const auto& block : kd.blocks) {
          bool meets = false;
          int hits = 0;
          for (int x : block) {
            if (std::binary_search(y.begin(), y.end(), x)) {
              meets = true;
              hits += std::binary_search(ct.t_f_y.begin(), ct.t_f_y.end(), x);
            }
          }
          blocks_meeting_y += meets;
          REQUIRE(hits == (meets ? 1 : 0));
        }
        REQUIRE(ct.t_f_y.size() == blocks_meeting_y);
      });
    });
  }
}

TEST_CASE("collapse does not depend on the transversal choice") {
  std::mt19937 rng(7);
  for (int round = 0; round < 100; ++round) {
    const int n = 1 + static_cast<int>(rng() % 7);
    std::vector<int> img(static_cast<std::size_t>(n));
    for (auto& v : img) {
      v = static_cast<int>(rng() % static_cast<unsigned>(n));
    }
    const Transformation f(img);
    const auto kd = kernel_data(f);
    for (int pick = 0; pick < 5; ++pick) {
      std::set<int> transversal;
      for (const auto& block : kd.blocks) {
        transversal.insert(block[rng() % block.size()]);
      }
      CHECK(n - static_cast<int>(transversal.size()) == kd.collapse);
    }
  }
}

TEST_CASE("restriction relabels through the order-preserving bijection") {
  CHECK(restriction(InvariantSetPair(4, {0, 1}, t({0, 0, 2, 2}))) == t({0, 0}));
  CHECK(restriction(InvariantSetPair(4, {1, 3}, t({0, 3, 2, 1}))) == t({1, 0}));
  const auto f = t({2, 0, 1, 3});
  CHECK(restriction(InvariantSetPair(4, {0, 1, 2, 3}, f)) == f);
}

TEST_CASE("compose applies left to right") {
  const auto g = t({1, 0, 3, 2});
  CHECK(compose(Transformation::identity(4), g) == g);
  CHECK(compose(t({1, 0}), t({1, 0})) == Transformation::identity(2));
  CHECK(compose(t({0, 0, 2, 2}), g) == t({1, 1, 3, 3}));
  CHECK_THROWS_AS(compose(t({0}), g), DimensionMismatch);
}

TEST_CASE("is_unit recognizes permutations") {
  CHECK(is_unit(Transformation::identity(5)));
  CHECK_FALSE(is_unit(t({0, 0})));
  CHECK(is_unit(t({2, 0, 1})));
}

TEST_CASE("validation rejects malformed input") {
  CHECK_THROWS_AS(t({0, 3}), DimensionMismatch);
  CHECK_THROWS_AS(t({}), DimensionMismatch);
  CHECK_THROWS_AS(InvariantSetPair(3, {}, Transformation::identity(3)),
                  InvarianceViolated);
  CHECK_THROWS_AS(InvariantSetPair(3, {0, 1}, t({2, 1, 2})), InvarianceViolated);
  CHECK_THROWS_AS(InvariantSetPair(2, {0, 5}, Transformation::identity(2)),
                  DimensionMismatch);
}

}  // TEST_SUITE
