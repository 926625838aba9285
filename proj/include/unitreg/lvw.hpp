#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "unitreg/ffla.hpp"

namespace unitreg {

// Default ceiling on the number of candidate matrices (p^(n*n)) the unit
// enumeration will walk; covers p in {2,3} up to n = 3 with plenty of room.
inline constexpr std::uint64_t kDefaultMatrixBound = 1'000'000;

// p^(n*n): candidates the unit enumeration filters. UINT64_MAX on overflow.
std::uint64_t unit_candidate_count(std::int64_t p, int n);

// Visits the invertible matrices g with Wg = W in lexicographic entry
// order, by filtering all p^(n*n) matrices. Stops early when visit
// returns false; throws BoundExceeded when the candidate count is above
// the bound.
void for_each_unit(const Subspace& w, const std::function<bool(const FFMatrix&)>& visit,
                   std::uint64_t bound = kDefaultMatrixBound);

std::vector<FFMatrix> units(const Subspace& w, std::uint64_t bound = kDefaultMatrixBound);

struct LvwDecision {
  bool unit_regular = false;
  bool cond_i = false;    // R(f|W) = W ∩ R(f)
  bool cond_ii = false;   // nullity(f|W) = corank(f|W)
  bool cond_iii = false;  // codim(W + T_f) = codim(W + R(f))
  int dim_range_restriction = 0;    // dim R(f|W)
  int dim_w_meet_range = 0;         // dim (W ∩ R(f))
  int dim_null_restriction = 0;     // dim N(f|W)
  int dim_w_plus_transversal = 0;   // dim (W + T_f)
  int dim_w_plus_range = 0;         // dim (W + R(f))
  std::optional<FFMatrix> witness;
};

// Evaluates the three conditions using the canonical transversal subspace
// and attaches the constructed witness unit when they all hold.
LvwDecision check(const InvariantSubspacePair& pair);

// The witness unit built by linear extension: a common basis of W ∩ R(f)
// extended to R(f), W, and V maps to the matching chain built from the
// transversal subspace, the kernel of the restriction, and an extension to
// V. Guarantees: invertible, Wg = W, fgf = f. Throws NotUnitRegular when
// check fails.
FFMatrix witness(const InvariantSubspacePair& pair);

// Exhaustive search for any unit g with fgf = f, in enumeration order.
std::optional<FFMatrix> oracle(const InvariantSubspacePair& pair,
                               std::uint64_t bound = kDefaultMatrixBound);
std::optional<FFMatrix> oracle_with_units(const InvariantSubspacePair& pair,
                                          const std::vector<FFMatrix>& unit_list);

// g invertible, Wg = W, fgf = f.
bool verify_witness(const InvariantSubspacePair& pair, const FFMatrix& g);

// nullity(f) = corank(f); the whole point of exposing it is that it is a
// provable constant `true` at finite dimension, checked rather than assumed.
bool check_lv(const FFMatrix& f);

// Whether the whole monoid {f : Wf ⊆ W} is unit-regular: W trivial.
bool semigroup_unit_regular(const Subspace& w);

// Brute-force confirmation of the above. Early-exits on the first failure.
bool exhaustive_unit_regular(const Subspace& w, std::uint64_t bound = kDefaultMatrixBound);

// Sweep enumerators.

// Every subspace of GF(p)^n exactly once (all RREF bases), by dimension,
// then by pivot columns, then by free entries.
void for_each_subspace(std::int64_t p, int n,
                       const std::function<void(const Subspace&)>& visit);

// Every f with Wf ⊆ W exactly once, generated block-wise in a basis
// adapted to W and conjugated back, so no filtering is needed.
void for_each_invariant_map(const Subspace& w,
                            const std::function<void(const FFMatrix&)>& visit);

// p^(n*n - k(n-k)): the number of f with Wf ⊆ W for dim W = k.
std::uint64_t invariant_map_count(std::int64_t p, int n, int k);

}  // namespace unitreg
