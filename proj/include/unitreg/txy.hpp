#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "unitreg/transformation.hpp"

namespace unitreg {

// Largest n the brute-force unit search accepts by default (8! = 40320
// candidate permutations in the worst case).
inline constexpr int kDefaultPointBound = 8;

// |Y|! * (n-|Y|)!: the number of permutations g of [0,n) with Yg = Y.
std::uint64_t unit_count(int n, const std::vector<int>& y);

// Visits the permutations g of [0,n) with Yg = Y in lexicographic order of
// image sequences. Enumeration stops early when visit returns false.
void for_each_unit(int n, const std::vector<int>& y,
                   const std::function<bool(const Transformation&)>& visit);

// Materialized unit list in the same order (for reuse across a sweep).
std::vector<Transformation> units(int n, const std::vector<int>& y);

// Outcome of the three-condition unit-regularity test. The four sets use
// ambient labels; the *_y sets are subsets of Y. collapse_set is the
// complement of the canonical constrained transversal, defect_set the
// complement of the range.
struct TxyDecision {
  bool unit_regular = false;
  bool cond_i = false;    // restriction to Y unit-regular in T(Y)
  bool cond_ii = false;   // R(f|Y) = Y ∩ R(f)
  bool cond_iii = false;  // |C(f)\C(f|Y)| = |D(f)\D(f|Y)|
  std::vector<int> collapse_set;    // X \ T_f
  std::vector<int> collapse_set_y;  // Y \ (Y ∩ T_f)
  std::vector<int> defect_set;      // X \ Xf
  std::vector<int> defect_set_y;    // Y \ Yf
  std::optional<Transformation> witness;
};

// Evaluates all three conditions on the canonical constrained transversal
// and attaches the constructed witness when they all hold.
TxyDecision check(const InvariantSetPair& pair);

// The witness unit g (Yg = Y, g bijective, fgf = f) built piecewise from
// the inverse of f on the transversal plus two order-preserving bijections
// between defect and collapse sets. Throws NotUnitRegular when check fails.
Transformation witness(const InvariantSetPair& pair);

// Exhaustive search for any unit g with fgf = f, in enumeration order.
// Throws BoundExceeded when n exceeds point_bound.
std::optional<Transformation> oracle(const InvariantSetPair& pair,
                                     int point_bound = kDefaultPointBound);

// Same search against a precomputed list (must be units(n, Y)).
std::optional<Transformation> oracle_with_units(
    const InvariantSetPair& pair, const std::vector<Transformation>& unit_list);

// Yg = Y, g bijective, fgf = f.
bool verify_witness(const InvariantSetPair& pair, const Transformation& g);

// Whether the whole monoid {f : Yf ⊆ Y} is unit-regular: |Y| = 1 or Y = X.
bool semigroup_unit_regular(int n, const std::vector<int>& y);

// Brute-force confirmation of the above: every f with Yf ⊆ Y passes the
// unit search. Early-exits on the first failure.
bool exhaustive_unit_regular(int n, const std::vector<int>& y,
                             int point_bound = kDefaultPointBound);

// Sweep enumerators.
void for_each_nonempty_subset(
    int n, const std::function<void(const std::vector<int>&)>& visit);
void for_each_invariant_transformation(
    int n, const std::vector<int>& y,
    const std::function<void(const Transformation&)>& visit);

// |Y|^|Y| * n^(n-|Y|): the number of f with Yf ⊆ Y.
std::uint64_t invariant_transformation_count(int n, const std::vector<int>& y);

}  // namespace unitreg
