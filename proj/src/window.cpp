#include "oplus/window.hpp"

#include <algorithm>
#include <bit>

namespace oplus {

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

namespace {
constexpr std::int64_t kMaxHorizon = std::int64_t{1} << 28;  // 32 MiB of bits

std::size_t words_for(std::int64_t horizon) {
  return static_cast<std::size_t>((horizon >> 6) + 1);
}
}  // namespace

WindowSet::WindowSet(std::int64_t horizon) : horizon_(horizon) {
  if (horizon < 1) throw WindowError("horizon must be positive");
  if (horizon > kMaxHorizon) throw WindowError("horizon too large for a dense window");
  bits_.assign(words_for(horizon), 0);
}

WindowSet::WindowSet(std::int64_t horizon, const std::vector<std::int64_t>& members)
    : WindowSet(horizon) {
  for (std::int64_t m : members) insert(m);
}

WindowSet WindowSet::full(std::int64_t horizon) {
  WindowSet w(horizon);
  for (auto& word : w.bits_) word = ~std::uint64_t{0};
  // Clear bit 0 and bits beyond the horizon.
  w.bits_[0] &= ~std::uint64_t{1};
  const int last = static_cast<int>(horizon & 63);
  if (last != 63)
    w.bits_.back() &= (std::uint64_t{1} << (last + 1)) - 1;
  return w;
}

void WindowSet::insert(std::int64_t m) {
  if (m < 1 || m > horizon_)
    throw WindowError("member " + std::to_string(m) + " outside [1, " +
                      std::to_string(horizon_) + "]");
  bits_[static_cast<std::size_t>(m >> 6)] |= std::uint64_t{1} << (m & 63);
}

std::int64_t WindowSet::count() const {
  std::int64_t c = 0;
  for (std::uint64_t w : bits_) c += std::popcount(w);
  return c;
}

std::vector<std::int64_t> WindowSet::members() const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    for (std::uint64_t w = bits_[i]; w != 0; w &= w - 1)
      out.push_back(static_cast<std::int64_t>(i << 6) + std::countr_zero(w));
  return out;
}

std::optional<std::int64_t> WindowSet::min_element() const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] != 0)
      return static_cast<std::int64_t>(i << 6) + std::countr_zero(bits_[i]);
  return std::nullopt;
}

std::optional<std::int64_t> WindowSet::min_above(std::int64_t x) const {
  if (x < 0) x = 0;
  for (std::int64_t m = x + 1; m <= horizon_;) {
    const std::size_t i = static_cast<std::size_t>(m >> 6);
    std::uint64_t w = bits_[i] >> (m & 63);
    if (w != 0) return m + std::countr_zero(w);
    m = static_cast<std::int64_t>((i + 1) << 6);
  }
  return std::nullopt;
}

WindowSet WindowSet::intersect(const WindowSet& other) const {
  WindowSet out(std::min(horizon_, other.horizon_));
  for (std::size_t i = 0; i < out.bits_.size(); ++i)
    out.bits_[i] = bits_[i] & other.bits_[i];
  const int last = static_cast<int>(out.horizon_ & 63);
  if (last != 63)
    out.bits_.back() &= (std::uint64_t{1} << (last + 1)) - 1;
  return out;
}

WindowSet WindowSet::above(std::int64_t x) const {
  WindowSet out = *this;
  if (x >= horizon_) {
    out.bits_.assign(out.bits_.size(), 0);
    return out;
  }
  if (x < 1) return out;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(x >> 6); ++i) {
    if (static_cast<std::int64_t>((i + 1) << 6) <= x + 1)
      out.bits_[i] = 0;
    else
      out.bits_[i] &= ~((std::uint64_t{1} << ((x & 63) + 1)) - 1);
  }
  return out;
}

WindowSet WindowSet::minus(const WindowSet& other) const {
  WindowSet out = *this;
  const std::size_t n = std::min(bits_.size(), other.bits_.size());
  for (std::size_t i = 0; i < n; ++i) out.bits_[i] &= ~other.bits_[i];
  return out;
}

bool WindowSet::subset_of(const WindowSet& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    const std::uint64_t theirs = i < other.bits_.size() ? other.bits_[i] : 0;
    if ((bits_[i] & ~theirs) != 0) return false;
  }
  return true;
}

bool WindowSet::operator==(const WindowSet& other) const {
  return horizon_ == other.horizon_ && bits_ == other.bits_;
}

WindowSet shift_set(const WindowSet& a, std::int64_t n) {
  if (n < 0) throw WindowError("shift by a negative amount");
  if (n == 0) return a;
  if (n >= a.horizon())
    throw WindowError("shift " + std::to_string(n) + " leaves no window (horizon " +
                      std::to_string(a.horizon()) + ")");
  WindowSet out(a.horizon() - n);
  for (std::int64_t m = 1; m <= out.horizon(); ++m)
    if (a.contains(m + n)) out.insert(m);
  return out;
}

}  // namespace oplus
