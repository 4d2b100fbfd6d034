#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "oplus/window.hpp"

namespace oplus {

/// The bijection between finite sets of nonnegative integers and the
/// nonnegative integers: a set of exponents maps to the sum of the
/// corresponding powers of two, the empty set to 0.
std::int64_t finset_encode(const std::vector<int>& exponents);
std::vector<int> finset_decode(std::int64_t code);

/// For finite sets F, G of even numbers >= 2: reports whether the code sum
/// encode(F) + encode(G) is again the code of an even-exponent set, whether
/// F and G are disjoint, and whether the decoded sum equals their union.
/// The first two coincide, and then the third holds: carries produced by a
/// shared exponent land on an odd position and spoil evenness.
struct CodeSumCheck {
  bool sum_is_code;
  bool disjoint;
  bool union_matches;
};
CodeSumCheck check_code_sum(const std::vector<int>& f, const std::vector<int>& g);

/// A fixed partition of the even numbers {2, 4, 6, ...} into infinitely many
/// infinite classes, indexed by the nonnegative integers. Class 0 is
/// {e : e = 2 mod 4}. The remaining evens e = 4j are routed by u = v2(j):
/// even u go to the (u/2 + 1)-th class index that is attainable as a code of
/// a finite nonempty subset of class 0 (those indices have all binary
/// exponents = 2 mod 4, and the i-th one is the bit-spread of i), odd u to
/// the ((u+1)/2)-th index that is not attainable. Attainable class indices
/// therefore own small evens, which keeps the gallery construction below
/// populated inside modest windows.
std::int64_t even_class(std::int64_t e);

/// The first count members of a class, in increasing order.
std::vector<std::int64_t> even_class_members(std::int64_t cls, int count);

/// The set X = {code(F u G)} over nonempty F from class 0 and nonempty G
/// from class code(F), truncated at the horizon. F and G are automatically
/// disjoint (different classes), so each member is code(F) + code(G).
WindowSet build_gallery_set(std::int64_t horizon);

/// Scans for a < b in X with a + b in X. Pairs whose sum exceeds the
/// horizon are undecidable and only counted.
struct TripleScan {
  bool no_triple;
  std::optional<std::array<std::int64_t, 3>> counterexample;
  std::int64_t pairs_checked;
  std::int64_t pairs_beyond_horizon;
};
TripleScan verify_no_sum_triple(const WindowSet& x);

/// Confirms that shifting X by code(F0), F0 a finite nonempty set of class-0
/// evens, leaves every windowed code of a nonempty subset of class code(F0)
/// inside the shifted set: the shifted X contains a finite-sums set.
struct ShiftWitnessReport {
  std::int64_t shift;          // code(F0)
  std::int64_t codes_checked;  // windowed codes verified
  bool holds;
};
ShiftWitnessReport verify_shift_witness(const std::vector<std::int64_t>& f0,
                                        std::int64_t horizon);

/// The union over k of the finite-sums sets of {2^i : 2^(k-1) <= i < 2^k},
/// truncated at the horizon. Finite-sums witnesses exist at every level, but
/// any witness found in a window stays inside a single block.
WindowSet fal_not_al_example(std::int64_t horizon);

/// The block index k whose generator exponents [2^(k-1), 2^k) cover every
/// binary exponent of value, or nullopt if the exponents straddle blocks.
std::optional<int> dyadic_block(std::int64_t value);

}  // namespace oplus
