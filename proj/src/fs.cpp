#include "oplus/fs.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace oplus {

FSGenerator::FSGenerator(std::vector<std::int64_t> elements)
    : elements_(std::move(elements)) {
  if (elements_.empty()) throw WindowError("generator must be nonempty");
  std::int64_t prev = 0;
  for (std::int64_t x : elements_) {
    if (x <= prev)
      throw WindowError("generator elements must be strictly increasing and positive");
    prev = x;
  }
}

std::int64_t FSGenerator::sum() const {
  std::int64_t s = 0;
  for (std::int64_t x : elements_) s += x;
  return s;
}

FSGenerator FSGenerator::tail(int cut) const {
  if (cut < 0 || cut >= size()) throw WindowError("tail cut out of range");
  return FSGenerator(std::vector<std::int64_t>(elements_.begin() + cut, elements_.end()));
}

WindowSet fs_set(const FSGenerator& x, std::int64_t horizon) {
  WindowSet out(horizon);
  // reachable[s] = s is a subset sum <= horizon; classic boolean knapsack.
  std::vector<char> reachable(static_cast<std::size_t>(horizon) + 1, 0);
  for (std::int64_t e : x.elements()) {
    if (e > horizon) continue;
    for (std::int64_t s = horizon; s >= e; --s)
      if (reachable[static_cast<std::size_t>(s - e)]) reachable[static_cast<std::size_t>(s)] = 1;
    reachable[static_cast<std::size_t>(e)] = 1;
  }
  for (std::int64_t s = 1; s <= horizon; ++s)
    if (reachable[static_cast<std::size_t>(s)]) out.insert(s);
  return out;
}

std::vector<std::vector<std::int64_t>> fu_set(
    const std::vector<std::vector<std::int64_t>>& blocks, int index_horizon) {
  const int b = std::min<int>(index_horizon, static_cast<int>(blocks.size()));
  if (b < 0) throw WindowError("negative index horizon");
  std::set<std::int64_t> seen;
  std::vector<std::vector<std::int64_t>> normalized;
  for (int i = 0; i < b; ++i) {
    std::vector<std::int64_t> blk = blocks[static_cast<std::size_t>(i)];
    std::sort(blk.begin(), blk.end());
    blk.erase(std::unique(blk.begin(), blk.end()), blk.end());
    for (std::int64_t e : blk)
      if (!seen.insert(e).second)
        throw NonDisjointBlocks("blocks share the element " + std::to_string(e));
    normalized.push_back(std::move(blk));
  }
  std::vector<std::vector<std::int64_t>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << b); ++mask) {
    std::vector<std::int64_t> u;
    for (int i = 0; i < b; ++i)
      if ((mask >> i) & 1u)
        u.insert(u.end(), normalized[static_cast<std::size_t>(i)].begin(),
                 normalized[static_cast<std::size_t>(i)].end());
    std::sort(u.begin(), u.end());
    out.push_back(std::move(u));
  }
  return out;
}

Tri fsx_member(const FSGenerator& x, const WindowSet& a) {
  bool any_unknown = false;
  for (int cut = 0; cut < x.size(); ++cut) {
    const FSGenerator t = x.tail(cut);
    const WindowSet windowed = fs_set(t, a.horizon());
    if (windowed.subset_of(a)) {
      if (t.sum() <= a.horizon()) return Tri::Yes;  // full FS visible and contained
      any_unknown = true;  // contained as far as the window shows
    }
    // Otherwise this tail is refuted by an in-window missing sum.
  }
  return any_unknown ? Tri::Unknown : Tri::No;
}

std::vector<std::int64_t> FSWitness::subset_sums(const std::vector<std::int64_t>& xs) {
  std::vector<std::int64_t> sums;
  sums.reserve((std::size_t{1} << xs.size()) - 1);
  for (std::int64_t x : xs) {
    const std::size_t existing = sums.size();
    for (std::size_t i = 0; i < existing; ++i) sums.push_back(sums[i] + x);
    sums.push_back(x);
  }
  return sums;
}

FSWitness::FSWitness(std::vector<std::int64_t> elements, const WindowSet& target)
    : elements_(std::move(elements)) {
  if (elements_.empty() || elements_.size() > 24)
    throw WindowError("witness size out of range");
  for (std::size_t i = 0; i + 1 < elements_.size(); ++i)
    if (elements_[i] >= elements_[i + 1])
      throw WindowError("witness elements must be strictly increasing");
  if (elements_.front() < 1) throw WindowError("witness elements must be positive");
  const auto sums = subset_sums(elements_);
  for (std::int64_t s : sums)
    if (!target.contains(s))
      throw WindowError("subset sum " + std::to_string(s) + " escapes the target set");
  sums_checked_ = static_cast<std::int64_t>(sums.size());
}

namespace {

bool fal_dfs(const WindowSet& a, int k, std::vector<std::int64_t>& partial,
             std::vector<std::int64_t>& sums, std::int64_t total) {
  if (static_cast<int>(partial.size()) == k) return true;
  const int remaining = k - static_cast<int>(partial.size());
  for (auto next = a.min_above(partial.empty() ? 0 : partial.back()); next;
       next = a.min_above(*next)) {
    const std::int64_t x = *next;
    // The eventual total uses remaining distinct elements >= x, so stop
    // once even the cheapest completion overshoots the horizon.
    const std::int64_t cheapest =
        total + remaining * x + static_cast<std::int64_t>(remaining) * (remaining - 1) / 2;
    if (cheapest > a.horizon()) break;
    bool ok = true;
    for (std::int64_t s : sums)
      if (!a.contains(s + x)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    const std::size_t sums_before = sums.size();
    for (std::size_t i = 0; i < sums_before; ++i) sums.push_back(sums[i] + x);
    sums.push_back(x);
    partial.push_back(x);
    if (fal_dfs(a, k, partial, sums, total + x)) return true;
    partial.pop_back();
    sums.resize(sums_before);
  }
  return false;
}

}  // namespace

std::optional<FSWitness> fal_level(const WindowSet& a, int k) {
  if (k < 1 || k > 24) throw WindowError("witness size out of range");
  std::vector<std::int64_t> partial, sums;
  if (!fal_dfs(a, k, partial, sums, 0)) return std::nullopt;
  return FSWitness(std::move(partial), a);
}

UltrafilterOracle fs_oracle(FSGenerator x) {
  UltrafilterOracle o;
  o.membership = [x](const WindowSet& a) { return fsx_member(x, a); };
  o.pick = [](const WindowSet& a) { return a.min_element(); };
  return o;
}

UltrafilterOracle principal_oracle(std::int64_t m) {
  UltrafilterOracle o;
  o.membership = [m](const WindowSet& a) {
    return a.contains(m) ? Tri::Yes : Tri::No;
  };
  o.pick = [m](const WindowSet& a) -> std::optional<std::int64_t> {
    if (a.contains(m)) return m;
    return std::nullopt;
  };
  return o;
}

ShiftPreimage oracle_shift_preimage(const WindowSet& a, const UltrafilterOracle& v,
                                    std::int64_t horizon) {
  ShiftPreimage out{WindowSet(horizon), WindowSet(horizon)};
  for (std::int64_t n = 1; n <= horizon; ++n) {
    if (n >= a.horizon()) {
      out.unknown.insert(n);  // the shifted window would be empty of information
      continue;
    }
    switch (v.membership(shift_set(a, n))) {
      case Tri::Yes: out.yes.insert(n); break;
      case Tri::Unknown: out.unknown.insert(n); break;
      case Tri::No: break;
    }
  }
  return out;
}

ShiftPreimage fsx_shift_preimage(const WindowSet& a, const FSGenerator& x,
                                 std::int64_t horizon) {
  return oracle_shift_preimage(a, fs_oracle(x), horizon);
}

namespace {

std::int64_t checked_pick(const UltrafilterOracle& v, const WindowSet& candidates,
                          const std::string& stage) {
  const auto x = v.pick(candidates);
  if (!x)
    throw OracleUndecided("extraction ran out of window: no pick at " + stage);
  if (!candidates.contains(*x))
    throw OracleInconsistent("pick " + std::to_string(*x) +
                             " is not a member of the queried set");
  return *x;
}

/// True when the oracle behaves like a point ultrafilter on this window:
/// it accepts the full window but rejects it with its own pick removed.
std::optional<std::int64_t> probe_principal(const UltrafilterOracle& v,
                                            std::int64_t horizon) {
  const WindowSet full = WindowSet::full(horizon);
  const auto p = v.pick(full);
  if (!p) return std::nullopt;
  WindowSet punctured = full;
  punctured = punctured.minus(WindowSet(horizon, {*p}));
  if (v.membership(punctured) == Tri::No) return p;
  return std::nullopt;
}

}  // namespace

ExtractResult galvin_extract(const WindowSet& a, const UltrafilterOracle& v, int k) {
  if (k < 1 || k > 24) throw WindowError("witness size out of range");
  switch (v.membership(a)) {
    case Tri::Yes: break;
    case Tri::Unknown:
      throw OracleUndecided("membership of the target set is undecided at this horizon");
    case Tri::No:
      throw PreconditionViolated("the target set is not a member of the oracle filter");
  }
  // A* = A intersected with its decided shift positions.
  const ShiftPreimage pre = oracle_shift_preimage(a, v, a.horizon());
  WindowSet current = a.intersect(pre.yes);
  std::vector<std::int64_t> picks;
  std::vector<WindowSet> pick_sets;
  for (int i = 0; i < k; ++i) {
    pick_sets.push_back(current);
    const std::int64_t last = picks.empty() ? 0 : picks.back();
    const std::int64_t x =
        checked_pick(v, current.above(last), "step " + std::to_string(i + 1));
    picks.push_back(x);
    if (i + 1 < k) {
      if (x >= current.horizon())
        throw OracleUndecided("extraction ran out of window after picking " +
                              std::to_string(x));
      current = current.intersect(shift_set(current, x));
    }
  }
  return ExtractResult{FSWitness(std::move(picks), a), std::move(pick_sets)};
}

namespace {

// Level sets for the k-step schedule: level 0 is A itself, level l >= 1 the
// decided shift-preimage of A under V^l.
std::vector<WindowSet> schedule_levels(const WindowSet& a, const UltrafilterOracle& v,
                                       std::span<const UltrafilterOracle> powers, int k) {
  std::vector<WindowSet> levels;
  levels.push_back(a);
  for (int l = 1; l < k; ++l) {
    const UltrafilterOracle& o = l == 1 ? v : powers[static_cast<std::size_t>(l - 2)];
    levels.push_back(oracle_shift_preimage(a, o, a.horizon()).yes);
  }
  return levels;
}

WindowSet schedule_intersection(const std::vector<WindowSet>& levels, int k, int j,
                                const std::vector<std::int64_t>& sums) {
  WindowSet c = WindowSet::full(levels[0].horizon());
  for (int l = 0; l <= k - j; ++l)
    for (std::int64_t s : sums) {
      if (s >= levels[static_cast<std::size_t>(l)].horizon())
        return WindowSet(1);  // shift impossible: nothing decidable remains
      c = c.intersect(shift_set(levels[static_cast<std::size_t>(l)], s));
    }
  return c;
}

void accumulate_sums(std::vector<std::int64_t>& sums, std::int64_t pick) {
  const std::size_t before = sums.size();
  for (std::size_t i = 0; i < before; ++i) sums.push_back(sums[i] + pick);
}

}  // namespace

ExtractResult weak_extract(const WindowSet& a, const UltrafilterOracle& v,
                           std::span<const UltrafilterOracle> powers, int k) {
  if (k < 1 || k > 24) throw WindowError("witness size out of range");
  if (static_cast<int>(powers.size()) < k - 2)
    throw WindowError("oracle chain too short: need the powers up to V^(k-1)");
  const std::vector<WindowSet> levels = schedule_levels(a, v, powers, k);

  // A principal oracle can only ever pick its own point, so strictly
  // increasing picks are impossible; the witness is the arithmetic
  // progression of its multiples when A holds all the needed ones.
  if (const auto m = probe_principal(v, a.horizon())) {
    std::vector<std::int64_t> picks;
    std::vector<std::int64_t> sums{0};
    std::vector<WindowSet> pick_sets;
    for (int j = 1; j <= k; ++j) {
      pick_sets.push_back(schedule_intersection(levels, k, j, sums));
      picks.push_back(*m * j);
      accumulate_sums(sums, picks.back());
    }
    try {
      return ExtractResult{FSWitness(std::move(picks), a), std::move(pick_sets)};
    } catch (const WindowError&) {
      throw PrincipalOracleDetected(
          "oracle is principal at " + std::to_string(*m) +
          " and the window lacks the multiples needed for a witness");
    }
  }

  std::vector<std::int64_t> picks;
  std::vector<std::int64_t> sums{0};
  std::vector<WindowSet> pick_sets;
  for (int j = 1; j <= k; ++j) {
    const WindowSet c = schedule_intersection(levels, k, j, sums);
    pick_sets.push_back(c);
    const std::int64_t last = picks.empty() ? 0 : picks.back();
    const WindowSet candidates = c.above(last);
    const auto x = v.pick(candidates);
    if (!x)
      throw OracleUndecided("extraction ran out of window at pick " + std::to_string(j));
    if (!candidates.contains(*x))
      throw OracleInconsistent("pick " + std::to_string(*x) +
                               " is not a member of the queried set");
    picks.push_back(*x);
    accumulate_sums(sums, *x);
  }
  return ExtractResult{FSWitness(std::move(picks), a), std::move(pick_sets)};
}

}  // namespace oplus
