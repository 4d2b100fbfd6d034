#include "oplus/folkman.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <random>
#include <string>

#include "oplus/fs.hpp"

namespace oplus {

void Coloring::validate() const {
  if (n < 1) throw Error("coloring interval must be nonempty");
  if (r < 1) throw Error("at least one color required");
  if (static_cast<std::int64_t>(colors.size()) != n)
    throw Error("coloring has " + std::to_string(colors.size()) + " entries for n = " +
                std::to_string(n));
  for (int c : colors)
    if (c < 0 || c >= r) throw Error("color out of range");
}

const char* certificate_kind_name(FolkmanCertificate::Kind k) {
  switch (k) {
    case FolkmanCertificate::Kind::BoundHolds: return "bound_holds";
    case FolkmanCertificate::Kind::CounterColoring: return "counter_coloring";
    case FolkmanCertificate::Kind::Unknown: return "unknown";
  }
  return "?";
}

namespace {

// Searches for a monochromatic witness among sets with the given total sum;
// with total = 0, any total is allowed. colored is the length of the decided
// prefix. Witnesses and their subset sums must stay within the prefix.
bool mono_dfs(const std::vector<int>& colors, std::int64_t colored, int set_size,
              int color, std::int64_t required_total, std::int64_t last,
              std::vector<std::int64_t>& partial, std::vector<std::int64_t>& sums,
              std::int64_t total) {
  if (static_cast<int>(partial.size()) == set_size)
    return required_total == 0 || total == required_total;
  const int remaining = set_size - static_cast<int>(partial.size());
  for (std::int64_t x = last + 1; x <= colored; ++x) {
    const std::int64_t cheapest =
        total + remaining * x + static_cast<std::int64_t>(remaining) * (remaining - 1) / 2;
    if (cheapest > colored) break;
    if (required_total != 0 && total + x > required_total) break;
    if (colors[static_cast<std::size_t>(x - 1)] != color) continue;
    bool ok = true;
    for (std::int64_t s : sums) {
      const std::int64_t ns = s + x;
      if (ns > colored || colors[static_cast<std::size_t>(ns - 1)] != color) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    const std::size_t before = sums.size();
    for (std::size_t i = 0; i < before; ++i) sums.push_back(sums[i] + x);
    sums.push_back(x);
    partial.push_back(x);
    if (mono_dfs(colors, colored, set_size, color, required_total, x, partial, sums,
                 total + x))
      return true;
    partial.pop_back();
    sums.resize(before);
  }
  return false;
}

std::optional<MonoWitness> find_witness(const std::vector<int>& colors,
                                        std::int64_t colored, int set_size,
                                        std::int64_t required_total) {
  // Lexicographically least witness overall: try ascending first elements,
  // color forced by the first element.
  std::optional<MonoWitness> best;
  for (std::int64_t x1 = 1; x1 <= colored; ++x1) {
    if (best && best->elements.front() <= x1) break;
    const int color = colors[static_cast<std::size_t>(x1 - 1)];
    std::vector<std::int64_t> partial{x1}, sums{x1};
    if (mono_dfs(colors, colored, set_size, color, required_total, x1, partial, sums, x1)) {
      if (!best || partial < best->elements) best = MonoWitness{color, partial};
    }
  }
  return best;
}

}  // namespace

std::optional<MonoWitness> mono_fs_witness(const Coloring& c, int set_size) {
  c.validate();
  if (set_size < 1) throw Error("witness size must be positive");
  return find_witness(c.colors, c.n, set_size, 0);
}

namespace {

struct TaskResult {
  std::optional<Coloring> counter;
  std::vector<PrunedBranch> branches;
  std::uint64_t nodes = 0;
  bool exceeded = false;
};

// Extends the coloring from position `depth` (0-based count of colored
// elements). The element depth+1 receives each color in turn.
void search_subtree(std::vector<int>& colors, std::int64_t depth, std::int64_t N,
                    int set_size, int r, std::uint64_t budget, TaskResult& out) {
  if (out.counter || out.exceeded) return;
  if (depth == N) {
    Coloring c;
    c.n = N;
    c.r = r;
    c.colors = colors;
    out.counter = std::move(c);
    return;
  }
  for (int color = 0; color < r; ++color) {
    if (out.counter || out.exceeded) return;
    if (++out.nodes > budget) {
      out.exceeded = true;
      return;
    }
    colors[static_cast<std::size_t>(depth)] = color;
    // A witness completed by this element has total sum exactly depth+1;
    // anything smaller was caught at an earlier level.
    if (auto w = find_witness(colors, depth + 1, set_size, depth + 1)) {
      out.branches.push_back(PrunedBranch{
          std::vector<int>(colors.begin(), colors.begin() + depth + 1), *w});
      continue;  // every completion of this branch is satisfied
    }
    search_subtree(colors, depth + 1, N, set_size, r, budget, out);
  }
  colors[static_cast<std::size_t>(depth)] = 0;
}

}  // namespace

FolkmanCertificate folkman_check(std::int64_t N, int set_size, int r,
                                 const SearchOptions& options) {
  if (N < 1 || set_size < 1 || r < 1) throw Error("folkman_check needs N, n, r >= 1");
  FolkmanCertificate cert;
  cert.interval = N;
  cert.set_size = set_size;
  cert.colors = r;

  // Fixed split: tasks are the surviving prefixes that color elements
  // 2..split_end (element 1 is pinned to color 0); identical for every
  // worker count, so certificates are schedule-independent.
  const std::int64_t split_end = std::min<std::int64_t>(N, 4);
  std::vector<std::vector<int>> task_prefixes;
  TaskResult enumeration;  // collects branches pruned while splitting
  {
    std::vector<int> colors(static_cast<std::size_t>(N), 0);
    // Element 1: color 0. Record an immediate witness if one exists (n = 1).
    ++enumeration.nodes;
    if (auto w = find_witness(colors, 1, set_size, 1)) {
      enumeration.branches.push_back(PrunedBranch{{0}, *w});
    } else {
      // Iterative enumeration of prefixes in lexicographic order.
      struct Frame {
        std::int64_t depth;
        std::vector<int> prefix;
      };
      std::vector<Frame> frames{{1, {0}}};
      while (!frames.empty()) {
        Frame f = std::move(frames.back());
        frames.pop_back();
        if (f.depth == split_end) {
          task_prefixes.push_back(std::move(f.prefix));
          continue;
        }
        // Record branches in ascending color order; push survivors in
        // reverse so they pop in ascending order too.
        std::vector<Frame> survivors;
        for (int color = 0; color < r; ++color) {
          std::vector<int> ext = f.prefix;
          ext.push_back(color);
          ++enumeration.nodes;
          std::copy(ext.begin(), ext.end(), colors.begin());
          if (auto w = find_witness(colors, f.depth + 1, set_size, f.depth + 1)) {
            enumeration.branches.push_back(PrunedBranch{std::move(ext), *w});
            continue;
          }
          survivors.push_back(Frame{f.depth + 1, std::move(ext)});
        }
        for (auto it = survivors.rbegin(); it != survivors.rend(); ++it)
          frames.push_back(std::move(*it));
      }
      // frames were pushed depth-first; reorder tasks lexicographically.
      std::sort(task_prefixes.begin(), task_prefixes.end());
    }
  }

  const std::uint64_t task_budget =
      task_prefixes.empty()
          ? options.node_budget
          : std::max<std::uint64_t>(1, options.node_budget / task_prefixes.size());

  std::vector<TaskResult> results(task_prefixes.size());
  auto run_task = [&](std::size_t t) {
    std::vector<int> colors(static_cast<std::size_t>(N), 0);
    std::copy(task_prefixes[t].begin(), task_prefixes[t].end(), colors.begin());
    search_subtree(colors, static_cast<std::int64_t>(task_prefixes[t].size()), N,
                   set_size, r, task_budget, results[t]);
  };
  const int workers = std::max(1, options.workers);
  if (workers == 1 || task_prefixes.size() <= 1) {
    for (std::size_t t = 0; t < task_prefixes.size(); ++t) run_task(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> pool;
    const int use = std::min<int>(workers, static_cast<int>(task_prefixes.size()));
    for (int w = 0; w < use; ++w)
      pool.push_back(std::async(std::launch::async, [&] {
        for (std::size_t t = next.fetch_add(1); t < task_prefixes.size();
             t = next.fetch_add(1))
          run_task(t);
      }));
    for (auto& f : pool) f.get();
  }

  // Merge in task order: deterministic regardless of scheduling.
  cert.nodes = enumeration.nodes;
  cert.branches = std::move(enumeration.branches);
  bool exceeded = false;
  std::optional<Coloring> counter;
  for (std::size_t t = 0; t < results.size(); ++t) {
    cert.nodes += results[t].nodes;
    if (!counter && results[t].counter) counter = results[t].counter;
    if (results[t].exceeded) exceeded = true;
    for (auto& b : results[t].branches) cert.branches.push_back(std::move(b));
  }
  if (counter) {
    cert.kind = FolkmanCertificate::Kind::CounterColoring;
    cert.counter = std::move(counter);
    cert.branches.clear();  // the counterexample is the certificate
  } else if (exceeded) {
    cert.kind = FolkmanCertificate::Kind::Unknown;
    cert.branches.clear();
  } else {
    cert.kind = FolkmanCertificate::Kind::BoundHolds;
  }
  return cert;
}

bool revalidate(const FolkmanCertificate& cert) {
  switch (cert.kind) {
    case FolkmanCertificate::Kind::Unknown:
      return true;  // no claim to validate
    case FolkmanCertificate::Kind::CounterColoring: {
      if (!cert.counter) return false;
      Coloring c = *cert.counter;
      if (c.n != cert.interval || c.r != cert.colors) return false;
      c.validate();
      return !mono_fs_witness(c, cert.set_size).has_value();
    }
    case FolkmanCertificate::Kind::BoundHolds: {
      for (const auto& b : cert.branches) {
        const std::int64_t len = static_cast<std::int64_t>(b.prefix.size());
        if (len < 1 || len > cert.interval) return false;
        Coloring partial;
        partial.n = len;
        partial.r = cert.colors;
        partial.colors = b.prefix;
        partial.validate();
        // The stored witness must be monochromatic inside its own prefix.
        if (static_cast<int>(b.witness.elements.size()) != cert.set_size) return false;
        std::vector<std::int64_t> sums = FSWitness::subset_sums(b.witness.elements);
        for (std::int64_t s : sums)
          if (s < 1 || s > len || partial.color_of(s) != b.witness.color) return false;
      }
      return true;
    }
  }
  return false;
}

FolkmanNumber folkman_number(int set_size, int r, std::int64_t n_max,
                             const SearchOptions& options) {
  FolkmanNumber out;
  std::optional<FolkmanCertificate> previous;
  for (std::int64_t N = 1; N <= n_max; ++N) {
    FolkmanCertificate cert = folkman_check(N, set_size, r, options);
    if (cert.kind == FolkmanCertificate::Kind::Unknown) {
      out.budget_hit = true;
      return out;
    }
    if (cert.kind == FolkmanCertificate::Kind::BoundHolds) {
      out.value = N;
      out.at_value = std::move(cert);
      out.below = std::move(previous);
      return out;
    }
    previous = std::move(cert);
  }
  return out;
}

ProbeReport fal_partition_regularity_probe(const WindowSet& a, int r, int k,
                                           std::int64_t trials, std::uint64_t seed) {
  if (r < 1 || k < 1 || trials < 0) throw Error("bad probe parameters");
  if (!fal_level(a, k))
    throw PreconditionNotEstablished(
        "the probed set has no finite-sums witness at the requested level");
  ProbeReport report;
  report.trials = trials;
  report.seed = seed;
  // The theorem backs the probe when A covers [1, folkman_number(k, r)].
  {
    SearchOptions opts;
    opts.node_budget = 50'000'000;
    const FolkmanNumber fn = folkman_number(k, r, std::min<std::int64_t>(a.horizon(), 64), opts);
    if (fn.value) {
      bool covered = true;
      for (std::int64_t e = 1; e <= *fn.value; ++e)
        if (!a.contains(e)) {
          covered = false;
          break;
        }
      report.interval_backed = covered;
    }
  }
  const std::vector<std::int64_t> members = a.members();
  std::mt19937_64 rng(seed);
  for (std::int64_t t = 0; t < trials; ++t) {
    std::vector<int> colors(members.size());
    for (auto& c : colors) c = static_cast<int>(rng() % static_cast<std::uint64_t>(r));
    bool some_piece = false;
    for (int piece = 0; piece < r && !some_piece; ++piece) {
      WindowSet w(a.horizon());
      for (std::size_t i = 0; i < members.size(); ++i)
        if (colors[i] == piece) w.insert(members[i]);
      if (!w.empty() && fal_level(w, k)) some_piece = true;
    }
    if (!some_piece) {
      ++report.violations;
      if (!report.first_violation) report.first_violation = colors;
    }
  }
  return report;
}

}  // namespace oplus
