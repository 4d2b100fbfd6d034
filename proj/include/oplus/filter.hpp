#pragma once

#include <functional>
#include <string>
#include <vector>

#include "oplus/semigroup.hpp"

namespace oplus {

/// A filter on a finite ground semigroup. Every filter on a finite set is
/// principal, so the canonical representation is the support: a set A belongs
/// to the filter iff A contains the support, and the support is the
/// intersection of all members. Ultrafilters are exactly the filters with
/// singleton support.
class PFilter {
 public:
  PFilter(FiniteSemigroup ground, ElementSet support);
  static PFilter principal(const FiniteSemigroup& ground, int point);
  /// The coarsest filter {S}: full support.
  static PFilter trivial(const FiniteSemigroup& ground);

  const FiniteSemigroup& ground() const { return ground_; }
  const ElementSet& support() const { return support_; }
  bool is_ultrafilter() const { return support_.size() == 1; }
  int point() const { return support_.min_element(); }  // for ultrafilters

  /// Membership: A belongs to the filter iff A contains the support.
  bool member(const ElementSet& a) const;

  /// Filter refinement: this contains other as a family of sets.
  /// Equivalent to support() being a subset of other.support().
  bool extends(const PFilter& other) const;

  bool operator==(const PFilter& other) const;

 private:
  FiniteSemigroup ground_;
  ElementSet support_;
};

/// {n : v*n in A}, the positions from which A is reachable by left
/// translation by v. This is the shift-preimage A_V for the point
/// ultrafilter V at v.
ElementSet shift_preimage(const ElementSet& a, int v);

/// Pseudo-sum of filters: A belongs to F (+) G iff {n : A-n in G} belongs
/// to F, where A-n = {m : m*n in A}. In the principal representation the
/// support of F (+) G is {g*f : g in supp G, f in supp F}; note the order
/// reversal on noncommutative grounds (the pseudo-sum of point ultrafilters
/// at a and b is the point ultrafilter at b*a).
PFilter pseudo_sum(const PFilter& f, const PFilter& g);

/// Additive: every ultrafilter V extending F satisfies that F (+) V
/// refines F. Checked literally over all extending point ultrafilters;
/// equivalent to the support being a subsemigroup.
bool is_additive(const PFilter& f);

/// The two-ultrafilter characterization of additivity: F is contained in
/// U (+) V for every pair of ultrafilters U, V extending F. Checked
/// literally as the quantified filter-inclusion test (the support shortcut
/// is left to the tests as an oracle).
bool is_additive_char(const PFilter& f);

/// Idempotent filter: F (+) F refines F. On finite grounds this coincides
/// with additivity (both reduce to the support being closed); the two
/// predicates are kept separate because they differ on infinite grounds.
bool is_idempotent_filter(const PFilter& f);

/// The smallest filter containing F together with every shift-preimage A_V,
/// A in G, for the point ultrafilter V at v. Requires the hypothesis that G
/// refines F (+) V, which guarantees the result is a proper filter; the
/// support is supp F intersected with the shift-preimage of supp G under v.
///
/// Throws PreconditionViolated when the hypothesis fails (EmptySupport when
/// in addition the intersection would be empty).
PFilter pullback_extend(const PFilter& f, int v, const PFilter& g);

/// The filter with support c (c nonempty), and its inverse.
PFilter fil_of(const FiniteSemigroup& s, const ElementSet& c);
ElementSet cl_of(const PFilter& f);

/// Deterministic selection of an element from a nonempty support.
using Chooser = std::function<int(const ElementSet&)>;
int min_element_chooser(const ElementSet& s);
int max_element_chooser(const ElementSet& s);

enum class StepRule { PsiStep, FvvStep, Fixpoint };
const char* step_rule_name(StepRule r);

struct ExtensionStep {
  int step;                  // 0-based position in the trace
  std::vector<int> support;  // support before the rule fires
  int chosen;                // element picked by the chooser
  StepRule rule;
};

struct PsiResult {
  int element;      // v with v in v * supp(fixpoint)
  PFilter fixpoint;
  std::vector<ExtensionStep> trace;
};

struct ThetaResult {
  int idempotent;
  std::vector<ExtensionStep> trace;
  int outer_steps;  // number of chooser stabilizations run
};

/// Stabilizing loop: repeatedly replaces F by F (+) U_v (v chosen from the
/// support) until the chosen v satisfies v in v * supp F. Each non-fixpoint
/// step strictly shrinks the support, so at most |supp F| iterations run.
/// Requires an additive input; the fixpoint is additive and refines F.
PsiResult psi_extend(const PFilter& f, const Chooser& chooser = {});

/// Extracts an idempotent u (u*u = u) from the support of an additive
/// filter: alternates the stabilizing loop with pullback steps toward the
/// chosen point until that point is idempotent. Terminates by strict
/// support shrinkage; the result lies in supp F.
ThetaResult theta_extend(const PFilter& f, const Chooser& chooser = {});

}  // namespace oplus
