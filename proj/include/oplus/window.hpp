#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oplus/errors.hpp"

namespace oplus {

/// Three-valued verdict for window-truncated queries. A window never
/// silently converts "undecided at this horizon" into a boolean.
enum class Tri { Yes, No, Unknown };
const char* tri_name(Tri t);

/// A subset of [1, horizon], standing in for a subset of the naturals that
/// is only known up to the horizon. The horizon is part of the value: shifts
/// reduce it, intersections take the minimum.
class WindowSet {
 public:
  explicit WindowSet(std::int64_t horizon);
  WindowSet(std::int64_t horizon, const std::vector<std::int64_t>& members);
  static WindowSet full(std::int64_t horizon);

  std::int64_t horizon() const { return horizon_; }
  bool contains(std::int64_t m) const {
    return m >= 1 && m <= horizon_ &&
           ((bits_[static_cast<std::size_t>(m >> 6)] >> (m & 63)) & 1u);
  }
  void insert(std::int64_t m);
  std::int64_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<std::int64_t> members() const;
  std::optional<std::int64_t> min_element() const;
  std::optional<std::int64_t> min_above(std::int64_t x) const;

  /// Intersection; the horizon of the result is the smaller horizon.
  WindowSet intersect(const WindowSet& other) const;
  /// Members strictly greater than x, same horizon.
  WindowSet above(std::int64_t x) const;
  /// Set difference (other's members removed), same horizon.
  WindowSet minus(const WindowSet& other) const;

  /// Every member of this set is a member of other (and within its horizon).
  bool subset_of(const WindowSet& other) const;
  /// Same horizon and same members.
  bool operator==(const WindowSet& other) const;

 private:
  std::int64_t horizon_;
  std::vector<std::uint64_t> bits_;  // bit m set <=> m in the set, m in [1, horizon]
};

/// A - n = {m : m + n in A}, with the horizon reduced by n. Requires
/// 0 <= n < A.horizon(); n = 0 returns A unchanged.
WindowSet shift_set(const WindowSet& a, std::int64_t n);

}  // namespace oplus
