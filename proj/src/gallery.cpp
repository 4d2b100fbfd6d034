#include "oplus/gallery.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "oplus/fs.hpp"

namespace oplus {

namespace {
constexpr int kMaxExponent = 62;

void check_exponent(int e) {
  if (e < 0 || e > kMaxExponent)
    throw Error("exponent " + std::to_string(e) + " outside [0, " +
                std::to_string(kMaxExponent) + "]");
}
}  // namespace

std::int64_t finset_encode(const std::vector<int>& exponents) {
  std::int64_t code = 0;
  for (int e : exponents) {
    check_exponent(e);
    const std::int64_t bit = std::int64_t{1} << e;
    if (code & bit) throw Error("duplicate exponent " + std::to_string(e));
    code |= bit;
  }
  return code;
}

std::vector<int> finset_decode(std::int64_t code) {
  if (code < 0) throw Error("codes are nonnegative");
  std::vector<int> out;
  for (std::uint64_t m = static_cast<std::uint64_t>(code); m != 0; m &= m - 1)
    out.push_back(std::countr_zero(m));
  return out;
}

namespace {
void check_even_exponents(const std::vector<int>& f) {
  for (int e : f)
    if (e < 2 || e % 2 != 0)
      throw NotEvenExponents("exponent " + std::to_string(e) +
                             " is not an even number >= 2");
}
}  // namespace

CodeSumCheck check_code_sum(const std::vector<int>& f, const std::vector<int>& g) {
  check_even_exponents(f);
  check_even_exponents(g);
  const std::int64_t cf = finset_encode(f);
  const std::int64_t cg = finset_encode(g);
  if (cf > std::numeric_limits<std::int64_t>::max() - cg)
    throw Error("code sum overflows");
  const std::int64_t sum = cf + cg;
  const std::vector<int> decoded = finset_decode(sum);
  bool sum_is_code = true;
  for (int e : decoded)
    if (e < 2 || e % 2 != 0) sum_is_code = false;
  const bool disjoint = (cf & cg) == 0;
  const bool union_matches = sum_is_code && sum == (cf | cg);
  return CodeSumCheck{sum_is_code, disjoint, union_matches};
}

namespace {

// Indices attainable as codes of finite nonempty subsets of class 0 are the
// positive integers whose binary exponents are all = 2 mod 4. The i-th such
// index spreads the bits of i four positions apart, starting at 2.
bool is_attainable_index(std::int64_t n) {
  if (n <= 0) return false;
  for (std::uint64_t m = static_cast<std::uint64_t>(n); m != 0; m &= m - 1)
    if (std::countr_zero(m) % 4 != 2) return false;
  return true;
}

std::int64_t spread_index(std::int64_t i) {
  std::int64_t out = 0;
  for (std::uint64_t m = static_cast<std::uint64_t>(i); m != 0; m &= m - 1) {
    const int b = std::countr_zero(m);
    if (4 * b + 2 > kMaxExponent) throw Error("class index overflow");
    out |= std::int64_t{1} << (4 * b + 2);
  }
  return out;
}

// Rank within the attainable indices (1-based); requires attainability.
std::int64_t unspread_index(std::int64_t n) {
  std::int64_t i = 0;
  for (std::uint64_t m = static_cast<std::uint64_t>(n); m != 0; m &= m - 1)
    i |= std::int64_t{1} << ((std::countr_zero(m) - 2) / 4);
  return i;
}

// The i-th positive integer that is not an attainable index (1-based).
std::int64_t nth_filler_index(std::int64_t i) {
  std::int64_t n = 0;
  while (i > 0) {
    ++n;
    if (!is_attainable_index(n)) --i;
  }
  return n;
}

// Rank of n within the non-attainable positive integers (1-based).
std::int64_t filler_rank(std::int64_t n) {
  std::int64_t rank = 0;
  for (std::int64_t m = 1; m <= n; ++m)
    if (!is_attainable_index(m)) ++rank;
  return rank;
}

}  // namespace

std::int64_t even_class(std::int64_t e) {
  if (e < 2 || e % 2 != 0)
    throw OddInput(std::to_string(e) + " is not an even number >= 2");
  if (e % 4 == 2) return 0;
  const std::int64_t j = e / 4;
  const int u = std::countr_zero(static_cast<std::uint64_t>(j));
  if (u % 2 == 0) return spread_index(u / 2 + 1);
  return nth_filler_index((u + 1) / 2);
}

std::vector<std::int64_t> even_class_members(std::int64_t cls, int count) {
  if (cls < 0) throw Error("class indices are nonnegative");
  if (count < 0) throw Error("negative count");
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(count));
  if (cls == 0) {
    for (int t = 0; t < count; ++t) out.push_back(2 + 4 * static_cast<std::int64_t>(t));
    return out;
  }
  // Class cls holds {4 * 2^u * (2w+1) : w >= 0} for the u determined by the
  // routing above.
  std::int64_t u;
  if (is_attainable_index(cls)) {
    u = 2 * (unspread_index(cls) - 1);
  } else {
    u = 2 * filler_rank(cls) - 1;
  }
  for (int w = 0; w < count; ++w) {
    if (u + 3 > kMaxExponent) throw Error("class member overflow");
    const std::int64_t m = (std::int64_t{4} << u) * (2 * static_cast<std::int64_t>(w) + 1);
    if (m < 0) throw Error("class member overflow");
    out.push_back(m);
  }
  return out;
}

namespace {

// Nonempty subsets of the given exponents whose codes stay within budget,
// in increasing mask order.
std::vector<std::int64_t> bounded_codes(const std::vector<int>& exponents,
                                        std::int64_t budget) {
  std::vector<std::int64_t> out;
  const int m = static_cast<int>(exponents.size());
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::int64_t code = 0;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      if ((mask >> i) & 1u) {
        code += std::int64_t{1} << exponents[static_cast<std::size_t>(i)];
        if (code > budget) ok = false;
      }
    if (ok) out.push_back(code);
  }
  return out;
}

std::vector<int> class_exponents_within(std::int64_t cls, std::int64_t budget) {
  std::vector<int> out;
  for (int e = 2; e <= kMaxExponent && (std::int64_t{1} << e) <= budget; e += 2)
    if (even_class(e) == cls) out.push_back(e);
  return out;
}

}  // namespace

WindowSet build_gallery_set(std::int64_t horizon) {
  if (horizon < 4) throw WindowError("gallery horizon must be at least 4");
  WindowSet x(horizon);
  const std::vector<int> class0 = class_exponents_within(0, horizon);
  const int m = static_cast<int>(class0.size());
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::int64_t code_f = 0;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      if ((mask >> i) & 1u) {
        code_f += std::int64_t{1} << class0[static_cast<std::size_t>(i)];
        if (code_f > horizon) ok = false;
      }
    if (!ok) continue;
    const std::int64_t budget = horizon - code_f;
    for (std::int64_t code_g : bounded_codes(class_exponents_within(code_f, budget), budget))
      x.insert(code_f + code_g);
  }
  return x;
}

TripleScan verify_no_sum_triple(const WindowSet& x) {
  TripleScan scan{true, std::nullopt, 0, 0};
  const std::vector<std::int64_t> ms = x.members();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      const std::int64_t sum = ms[i] + ms[j];
      if (sum > x.horizon()) {
        ++scan.pairs_beyond_horizon;
        continue;
      }
      ++scan.pairs_checked;
      if (x.contains(sum)) {
        scan.no_triple = false;
        if (!scan.counterexample) scan.counterexample = {ms[i], ms[j], sum};
      }
    }
  return scan;
}

ShiftWitnessReport verify_shift_witness(const std::vector<std::int64_t>& f0,
                                        std::int64_t horizon) {
  if (f0.empty()) throw NotClassZero("F0 must be a nonempty set of class-0 evens");
  std::int64_t shift = 0;
  for (std::int64_t e : f0) {
    if (even_class(e) != 0)
      throw NotClassZero(std::to_string(e) + " is not in class 0");
    if (e > kMaxExponent) throw Error("exponent overflow");
    shift += std::int64_t{1} << e;
  }
  if (shift >= horizon)
    throw VacuousWindow("shift " + std::to_string(shift) +
                        " leaves no window below horizon " + std::to_string(horizon));
  const WindowSet x = build_gallery_set(horizon);
  const WindowSet shifted = shift_set(x, shift);
  ShiftWitnessReport report{shift, 0, true};
  for (std::int64_t code : bounded_codes(class_exponents_within(shift, horizon - shift),
                                         horizon - shift)) {
    ++report.codes_checked;
    if (!shifted.contains(code)) report.holds = false;
  }
  return report;
}

WindowSet fal_not_al_example(std::int64_t horizon) {
  WindowSet a(horizon);
  for (int k = 1;; ++k) {
    const std::int64_t lo = std::int64_t{1} << (k - 1);  // first exponent of block k
    if (lo > kMaxExponent || (std::int64_t{1} << lo) > horizon) break;
    std::vector<std::int64_t> block;
    for (std::int64_t i = lo; i < (std::int64_t{2} << (k - 1)); ++i) {
      if (i > kMaxExponent || (std::int64_t{1} << i) > horizon) break;
      block.push_back(std::int64_t{1} << i);
    }
    for (std::int64_t s : fs_set(FSGenerator(block), horizon).members()) a.insert(s);
  }
  return a;
}

std::optional<int> dyadic_block(std::int64_t value) {
  if (value < 2) return std::nullopt;  // exponent 0 belongs to no block
  const std::vector<int> exps = finset_decode(value);
  if (exps.front() < 1) return std::nullopt;
  const int k = std::bit_width(static_cast<std::uint64_t>(exps.front()));
  for (int e : exps)
    if (e < (1 << (k - 1)) || e >= (1 << k)) return std::nullopt;
  return k;
}

}  // namespace oplus
