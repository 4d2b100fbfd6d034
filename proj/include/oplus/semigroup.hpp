#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "oplus/errors.hpp"

namespace oplus {

/// A finite semigroup given by a total Cayley table, validated at
/// construction: every entry in [0, order) and associativity checked by an
/// exhaustive triple scan. Elements are dense indices 0..order-1; any naming
/// lives in the label. Orders up to 64 are supported so element sets fit in
/// one machine word.
///
/// Immutable after construction; copies share the table.
class FiniteSemigroup {
 public:
  static constexpr int kMaxOrder = 64;

  /// Validates and wraps a table. Throws InvalidTable or NonAssociative.
  static FiniteSemigroup from_table(const std::vector<std::vector<int>>& table,
                                    std::string label = "");

  int order() const { return data_->n; }
  int op(int a, int b) const { return data_->table[a * data_->n + b]; }
  const std::string& label() const { return data_->label; }

  /// True when the two objects denote the same semigroup: either shared
  /// storage or an identical table. Structural comparison keeps separately
  /// loaded copies of one table interoperable.
  bool same_ground(const FiniteSemigroup& other) const;

  void check_element(int x) const;

 private:
  struct Data {
    int n;
    std::vector<int> table;
    std::string label;
  };
  explicit FiniteSemigroup(std::shared_ptr<const Data> data)
      : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

// Builders. Each returns a validated semigroup.
FiniteSemigroup cyclic_mod(int n);                // (Z_n, + mod n)
FiniteSemigroup left_zero(int n);                 // a*b = a
FiniteSemigroup right_zero(int n);                // a*b = b
FiniteSemigroup meet_semilattice2();              // 2x2 table [[0,0],[0,1]]
FiniteSemigroup transformation_monoid(int k);     // all maps [k]->[k], k <= 3

/// A subset of a semigroup's elements, stored as a 64-bit mask.
class ElementSet {
 public:
  explicit ElementSet(FiniteSemigroup ground)
      : ground_(std::move(ground)), bits_(0) {}
  ElementSet(FiniteSemigroup ground, const std::vector<int>& members);
  static ElementSet full(const FiniteSemigroup& ground);
  static ElementSet singleton(const FiniteSemigroup& ground, int x);
  static ElementSet from_mask(const FiniteSemigroup& ground, std::uint64_t m);

  const FiniteSemigroup& ground() const { return ground_; }
  std::uint64_t mask() const { return bits_; }
  bool contains(int x) const { return (bits_ >> x) & 1u; }
  bool empty() const { return bits_ == 0; }
  int size() const;
  std::vector<int> members() const;
  int min_element() const;  // requires nonempty
  int max_element() const;  // requires nonempty

  ElementSet union_with(const ElementSet& other) const;
  ElementSet intersect(const ElementSet& other) const;
  bool subset_of(const ElementSet& other) const;
  bool operator==(const ElementSet& other) const;

 private:
  FiniteSemigroup ground_;
  std::uint64_t bits_;
};

/// {a*b : a in A, b in B}. Throws GroundMismatch if A, B disagree.
ElementSet product_set(const ElementSet& a, const ElementSet& b);

/// All e with e*e = e. Nonempty for every valid finite semigroup.
ElementSet idempotents(const FiniteSemigroup& s);

/// The unique idempotent in the cyclic subsemigroup generated by x,
/// found from the index and period of the power sequence.
int power_idempotent(const FiniteSemigroup& s, int x);

/// True iff b is nonempty and closed under the operation.
bool is_subsemigroup(const ElementSet& b);

/// All inclusion-minimal nonempty subsemigroups. For orders <= 20 this
/// enumerates every nonempty subset (the exhaustive route doubles as an
/// oracle); above that it returns the idempotent singletons directly, which
/// is the same family: any nonempty closed subset contains some <x> and hence
/// the idempotent power of x, so the minimal ones are idempotent singletons.
std::vector<ElementSet> minimal_subsemigroups(const FiniteSemigroup& s);

}  // namespace oplus
