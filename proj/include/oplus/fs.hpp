#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "oplus/window.hpp"

namespace oplus {

/// A strictly increasing finite sequence of positive integers, standing in
/// for an infinite generating set of a finite-sums set.
class FSGenerator {
 public:
  explicit FSGenerator(std::vector<std::int64_t> elements);
  const std::vector<std::int64_t>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  std::int64_t sum() const;
  /// The tail after dropping the first cut elements (cut < size).
  FSGenerator tail(int cut) const;

 private:
  std::vector<std::int64_t> elements_;
};

/// FS(X) within the window: all sums over nonempty sets of distinct
/// elements of X that do not exceed the horizon.
WindowSet fs_set(const FSGenerator& x, std::int64_t horizon);

/// FU of the first index_horizon blocks: all unions of nonempty
/// subfamilies. Blocks must be pairwise disjoint. Unions are returned as
/// sorted vectors, ordered by subfamily (mask ascending).
std::vector<std::vector<std::int64_t>> fu_set(
    const std::vector<std::vector<std::int64_t>>& blocks, int index_horizon);

/// Membership of A in the tail-sums filter of X, decided at window scale:
///   Yes      some tail X minus a prefix has its full FS inside A
///            (containment visible and sum(tail) <= horizon, so nothing is
///            truncated);
///   No       every tail is refuted by an in-window missing sum;
///   Unknown  otherwise (the horizon truncates the decision).
Tri fsx_member(const FSGenerator& x, const WindowSet& a);

/// Elements x_1 < ... < x_k together with the verified containment of all
/// 2^k - 1 subset sums in the target window. The constructor checks the
/// containment and throws WindowError if it fails.
class FSWitness {
 public:
  FSWitness(std::vector<std::int64_t> elements, const WindowSet& target);
  const std::vector<std::int64_t>& elements() const { return elements_; }
  std::int64_t sums_checked() const { return sums_checked_; }

  /// All nonempty subset sums of a strictly increasing list.
  static std::vector<std::int64_t> subset_sums(const std::vector<std::int64_t>& xs);

 private:
  std::vector<std::int64_t> elements_;
  std::int64_t sums_checked_;
};

/// Searches for x_1 < ... < x_k with every subset sum in A; returns the
/// lexicographically least witness or nullopt if none exists in the window.
/// Exhaustive backtracking with total-sum pruning.
std::optional<FSWitness> fal_level(const WindowSet& a, int k);

/// A window-scale stand-in for an ultrafilter: tri-state membership plus a
/// deterministic pick of an element from a queried set. The caller is
/// responsible for feeding oracles whose behavior on the queried sets
/// matches the intended filter (membership of the full window is Yes,
/// membership is monotone where decided, pick returns a member).
struct UltrafilterOracle {
  std::function<Tri(const WindowSet&)> membership;
  std::function<std::optional<std::int64_t>(const WindowSet&)> pick;
};

/// The tail-sums filter of X as an oracle; pick takes the least member.
UltrafilterOracle fs_oracle(FSGenerator x);
/// The point ultrafilter at m: membership is "contains m", pick returns m.
UltrafilterOracle principal_oracle(std::int64_t m);

/// Positions n (up to the given horizon) where the shifted set A - n is a
/// decided member of the tail-sums filter of X; Unknown positions tracked
/// separately. Positions at or beyond A's horizon are Unknown.
struct ShiftPreimage {
  WindowSet yes;
  WindowSet unknown;
};
ShiftPreimage fsx_shift_preimage(const WindowSet& a, const FSGenerator& x,
                                 std::int64_t horizon);
/// Same computation against an arbitrary oracle.
ShiftPreimage oracle_shift_preimage(const WindowSet& a, const UltrafilterOracle& v,
                                    std::int64_t horizon);

/// Result of an extraction: the verified witness plus the intersection set
/// each element was picked from (before the strictness restriction).
struct ExtractResult {
  FSWitness witness;
  std::vector<WindowSet> pick_sets;
};

/// The iterated shift-intersection extraction: starting from
/// A* = A restricted to oracle-decided shift positions, repeatedly pick the
/// least element above the previous pick and intersect with the
/// corresponding shift. Produces x_1 < ... < x_k with FS({x_i}) inside A.
///
/// Requires membership(A) = Yes. Throws OracleUndecided when the window is
/// exhausted and OracleInconsistent if a pick falls outside its set.
ExtractResult galvin_extract(const WindowSet& a, const UltrafilterOracle& v, int k);

/// The k-step extraction from the weaker hypothesis: level sets are the
/// shift-preimages of A under V, V^2, ..., V^(k-1) (powers[j] stands for
/// V^(j+2); an idempotent oracle may pass a constant chain, a principal one
/// the chain of its multiples). Pick j is taken from the intersection of
/// the levels 0..k-j shifted by every subset sum of the picks so far.
///
/// Throws PrincipalOracleDetected when strictly increasing picks are
/// impossible because V is principal, OracleUndecided otherwise.
ExtractResult weak_extract(const WindowSet& a, const UltrafilterOracle& v,
                           std::span<const UltrafilterOracle> powers, int k);

}  // namespace oplus
