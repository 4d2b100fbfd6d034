#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oplus/window.hpp"

namespace oplus {

/// An r-coloring of the interval [1, n]; colors[i-1] is the color of i.
struct Coloring {
  std::int64_t n = 0;
  int r = 1;
  std::vector<int> colors;

  void validate() const;
  int color_of(std::int64_t element) const {
    return colors[static_cast<std::size_t>(element - 1)];
  }
};

struct MonoWitness {
  int color = 0;
  std::vector<std::int64_t> elements;  // strictly increasing
};

/// Exhaustively searches for set_size distinct elements whose nonempty
/// subset sums all lie in [1, c.n] and share one color; returns the
/// lexicographically least witness.
std::optional<MonoWitness> mono_fs_witness(const Coloring& c, int set_size);

/// A branch of the coloring search tree that was pruned because its partial
/// coloring already contains a monochromatic witness (every completion is
/// satisfied). prefix[i] is the color of i+1.
struct PrunedBranch {
  std::vector<int> prefix;
  MonoWitness witness;
};

struct SearchOptions {
  std::uint64_t node_budget = 1'000'000'000;
  int workers = 1;
};

/// Outcome of checking one interval length. BoundHolds certificates carry a
/// monochromatic witness per pruned branch; CounterColoring carries a
/// complete witness-free coloring (canonicalized: element 1 has color 0).
/// Unknown is returned when the node budget runs out; never a wrong verdict.
struct FolkmanCertificate {
  enum class Kind { BoundHolds, CounterColoring, Unknown };
  Kind kind = Kind::Unknown;
  std::int64_t interval = 0;  // N
  int set_size = 0;           // n
  int colors = 0;             // r
  std::vector<PrunedBranch> branches;
  std::optional<Coloring> counter;
  std::uint64_t nodes = 0;
};
const char* certificate_kind_name(FolkmanCertificate::Kind k);

/// True iff every r-coloring of [1, N] admits a monochromatic finite-sums
/// witness of the given size. DFS over colorings with the color of 1 fixed
/// and satisfied branches pruned; the certificate content is independent of
/// the worker count (fixed task split, per-task budgets, merge in task
/// order).
FolkmanCertificate folkman_check(std::int64_t N, int set_size, int r,
                                 const SearchOptions& options = {});

/// Re-derives every stored verdict: each pruned-branch witness is checked
/// against its prefix, and a counter-coloring is re-searched from scratch.
bool revalidate(const FolkmanCertificate& cert);

/// Least N <= n_max with BoundHolds, found incrementally; carries the
/// certificate at N and the counterexample certificate at N-1 when N > 1.
struct FolkmanNumber {
  std::optional<std::int64_t> value;
  std::optional<FolkmanCertificate> at_value;
  std::optional<FolkmanCertificate> below;
  bool budget_hit = false;
};
FolkmanNumber folkman_number(int set_size, int r, std::int64_t n_max,
                             const SearchOptions& options = {});

/// Samples random r-partitions of A (seeded, deterministic) and verifies
/// that some piece passes fal_level(piece, k). Requires fal_level(A, k) to
/// succeed. A violation would indicate an implementation bug whenever the
/// interval [1, folkman_number(k, r)] lies inside A; the report records
/// whether that backing was established.
struct ProbeReport {
  std::int64_t trials = 0;
  std::int64_t violations = 0;
  std::uint64_t seed = 0;
  bool interval_backed = false;
  std::optional<std::vector<int>> first_violation;  // colors of A's members
};
ProbeReport fal_partition_regularity_probe(const WindowSet& a, int r, int k,
                                           std::int64_t trials, std::uint64_t seed);

}  // namespace oplus
