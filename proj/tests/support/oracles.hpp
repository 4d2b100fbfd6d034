#pragma once

// Test-only oracles that work from the raw definitions, independent of the
// library's closed-form implementations.

#include <cstdint>
#include <vector>

#include "oplus/filter.hpp"
#include "oplus/semigroup.hpp"

namespace test_support {

using oplus::ElementSet;
using oplus::FiniteSemigroup;
using oplus::PFilter;

// Membership of the set with the given mask in the filter with the given
// support mask: the set must contain the support.
inline bool mask_member(std::uint64_t set, std::uint64_t support) {
  return (support & ~set) == 0;
}

// All members of the pseudo-sum F (+) G, computed by enumerating every
// subset A of the ground and applying the definition directly:
// A is a member iff {n : A - n in G} is a member of F, where
// A - n = {m : m * n in A}.
inline std::vector<std::uint64_t> definition_pseudo_sum_members(
    const FiniteSemigroup& s, std::uint64_t supp_f, std::uint64_t supp_g) {
  const int n = s.order();
  std::vector<std::uint64_t> members;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
    std::uint64_t positions = 0;
    for (int pos = 0; pos < n; ++pos) {
      std::uint64_t shifted = 0;  // A - pos
      for (int m = 0; m < n; ++m)
        if ((a >> s.op(m, pos)) & 1u) shifted |= std::uint64_t{1} << m;
      if (mask_member(shifted, supp_g)) positions |= std::uint64_t{1} << pos;
    }
    if (mask_member(positions, supp_f)) members.push_back(a);
  }
  return members;
}

// The support of the pseudo-sum per the definition: the intersection of all
// members.
inline std::uint64_t definition_pseudo_sum_support(const FiniteSemigroup& s,
                                                   std::uint64_t supp_f,
                                                   std::uint64_t supp_g) {
  std::uint64_t inter = ~std::uint64_t{0};
  for (std::uint64_t a : definition_pseudo_sum_members(s, supp_f, supp_g)) inter &= a;
  const int n = s.order();
  return n == 64 ? inter : inter & ((std::uint64_t{1} << n) - 1);
}

// Nonempty support masks of a ground semigroup, ascending.
inline std::vector<std::uint64_t> all_supports(const FiniteSemigroup& s) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << s.order()); ++m) out.push_back(m);
  return out;
}

inline PFilter filter_of_mask(const FiniteSemigroup& s, std::uint64_t mask) {
  return PFilter(s, ElementSet::from_mask(s, mask));
}

// The curated grounds most tests sweep over.
inline std::vector<FiniteSemigroup> curated_small() {
  return {oplus::cyclic_mod(2),  oplus::cyclic_mod(3),  oplus::cyclic_mod(4),
          oplus::cyclic_mod(5),  oplus::left_zero(2),   oplus::left_zero(3),
          oplus::left_zero(4),   oplus::right_zero(3),  oplus::right_zero(4),
          oplus::meet_semilattice2(), oplus::transformation_monoid(2)};
}

}  // namespace test_support
