#include "oplus/semigroup.hpp"

#include <algorithm>
#include <bit>

namespace oplus {

FiniteSemigroup FiniteSemigroup::from_table(
    const std::vector<std::vector<int>>& table, std::string label) {
  const int n = static_cast<int>(table.size());
  if (n < 1) throw InvalidTable("empty table");
  if (n > kMaxOrder)
    throw InvalidTable("order " + std::to_string(n) + " exceeds supported maximum " +
                       std::to_string(kMaxOrder));
  auto data = std::make_shared<Data>();
  data->n = n;
  data->label = std::move(label);
  data->table.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw InvalidTable("row " + std::to_string(a) + " has length " +
                         std::to_string(table[a].size()) + ", expected " +
                         std::to_string(n));
    for (int b = 0; b < n; ++b) {
      const int v = table[a][b];
      if (v < 0 || v >= n)
        throw InvalidTable("entry (" + std::to_string(a) + ", " + std::to_string(b) +
                           ") = " + std::to_string(v) + " out of range");
      data->table[static_cast<std::size_t>(a) * n + b] = v;
    }
  }
  // Exhaustive n^3 associativity scan; everything downstream assumes it.
  const auto& t = data->table;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[static_cast<std::size_t>(t[static_cast<std::size_t>(a) * n + b]) * n + c] !=
            t[static_cast<std::size_t>(a) * n + t[static_cast<std::size_t>(b) * n + c]])
          throw NonAssociative(a, b, c);
  return FiniteSemigroup(std::move(data));
}

bool FiniteSemigroup::same_ground(const FiniteSemigroup& other) const {
  if (data_ == other.data_) return true;
  return data_->n == other.data_->n && data_->table == other.data_->table;
}

void FiniteSemigroup::check_element(int x) const {
  if (x < 0 || x >= order())
    throw Error("element " + std::to_string(x) + " out of range for order " +
                std::to_string(order()));
}

FiniteSemigroup cyclic_mod(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteSemigroup::from_table(t, "Z" + std::to_string(n));
}

FiniteSemigroup left_zero(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = a;
  return FiniteSemigroup::from_table(t, "LZ" + std::to_string(n));
}

FiniteSemigroup right_zero(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = b;
  return FiniteSemigroup::from_table(t, "RZ" + std::to_string(n));
}

FiniteSemigroup meet_semilattice2() {
  return FiniteSemigroup::from_table({{0, 0}, {0, 1}}, "SL2");
}

FiniteSemigroup transformation_monoid(int k) {
  if (k < 1 || k > 3) throw InvalidTable("transformation monoid supported for k in [1,3]");
  int order = 1;
  for (int i = 0; i < k; ++i) order *= k;
  // Element m encodes the map i -> digit_i(m) in base k.
  auto apply = [k](int m, int i) {
    for (int j = 0; j < i; ++j) m /= k;
    return m % k;
  };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int f = 0; f < order; ++f)
    for (int g = 0; g < order; ++g) {
      // f*g applies f first, then g.
      int enc = 0, pw = 1;
      for (int i = 0; i < k; ++i) {
        enc += apply(g, apply(f, i)) * pw;
        pw *= k;
      }
      t[f][g] = enc;
    }
  return FiniteSemigroup::from_table(t, "T" + std::to_string(k));
}

ElementSet::ElementSet(FiniteSemigroup ground, const std::vector<int>& members)
    : ground_(std::move(ground)), bits_(0) {
  for (int x : members) {
    ground_.check_element(x);
    bits_ |= std::uint64_t{1} << x;
  }
}

ElementSet ElementSet::full(const FiniteSemigroup& ground) {
  const int n = ground.order();
  const std::uint64_t m =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return from_mask(ground, m);
}

ElementSet ElementSet::singleton(const FiniteSemigroup& ground, int x) {
  ground.check_element(x);
  return from_mask(ground, std::uint64_t{1} << x);
}

ElementSet ElementSet::from_mask(const FiniteSemigroup& ground, std::uint64_t m) {
  ElementSet s(ground);
  if (ground.order() < 64 && (m >> ground.order()) != 0)
    throw Error("mask exceeds semigroup order");
  s.bits_ = m;
  return s;
}

int ElementSet::size() const { return std::popcount(bits_); }

std::vector<int> ElementSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t m = bits_; m != 0; m &= m - 1)
    out.push_back(std::countr_zero(m));
  return out;
}

int ElementSet::min_element() const {
  if (empty()) throw EmptySupport("min of empty element set");
  return std::countr_zero(bits_);
}

int ElementSet::max_element() const {
  if (empty()) throw EmptySupport("max of empty element set");
  return 63 - std::countl_zero(bits_);
}

namespace {
void require_same_ground(const ElementSet& a, const ElementSet& b) {
  if (!a.ground().same_ground(b.ground()))
    throw GroundMismatch("element sets over different semigroups");
}
}  // namespace

ElementSet ElementSet::union_with(const ElementSet& other) const {
  require_same_ground(*this, other);
  return from_mask(ground_, bits_ | other.bits_);
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  require_same_ground(*this, other);
  return from_mask(ground_, bits_ & other.bits_);
}

bool ElementSet::subset_of(const ElementSet& other) const {
  require_same_ground(*this, other);
  return (bits_ & ~other.bits_) == 0;
}

bool ElementSet::operator==(const ElementSet& other) const {
  return ground_.same_ground(other.ground_) && bits_ == other.bits_;
}

ElementSet product_set(const ElementSet& a, const ElementSet& b) {
  require_same_ground(a, b);
  const FiniteSemigroup& s = a.ground();
  std::uint64_t out = 0;
  for (int x : a.members())
    for (int y : b.members()) out |= std::uint64_t{1} << s.op(x, y);
  return ElementSet::from_mask(s, out);
}

ElementSet idempotents(const FiniteSemigroup& s) {
  std::uint64_t out = 0;
  for (int e = 0; e < s.order(); ++e)
    if (s.op(e, e) == e) out |= std::uint64_t{1} << e;
  return ElementSet::from_mask(s, out);
}

int power_idempotent(const FiniteSemigroup& s, int x) {
  s.check_element(x);
  // Walk x, x^2, x^3, ... until a repeat; the sequence has index i and
  // period p, and the unique idempotent power is x^m for the single
  // multiple m of p in [i, i+p).
  std::vector<int> first(static_cast<std::size_t>(s.order()), -1);
  std::vector<int> powers;  // powers[j] = x^(j+1)
  int cur = x;
  int pos = 0;
  while (first[static_cast<std::size_t>(cur)] < 0) {
    first[static_cast<std::size_t>(cur)] = pos;
    powers.push_back(cur);
    cur = s.op(cur, x);
    ++pos;
  }
  const int index = first[static_cast<std::size_t>(cur)];  // 0-based position of repeat
  const int period = pos - index;
  int m = ((index + period) / period) * period;  // least multiple of p >= index+1
  // powers are 1-based exponents at 0-based positions: x^m sits at m-1.
  return powers[static_cast<std::size_t>(m - 1)];
}

bool is_subsemigroup(const ElementSet& b) {
  if (b.empty()) return false;
  return product_set(b, b).subset_of(b);
}

namespace {
bool mask_closed(const FiniteSemigroup& s, std::uint64_t m) {
  for (std::uint64_t x = m; x != 0; x &= x - 1) {
    const int a = std::countr_zero(x);
    for (std::uint64_t y = m; y != 0; y &= y - 1) {
      const int b = std::countr_zero(y);
      if (!((m >> s.op(a, b)) & 1u)) return false;
    }
  }
  return true;
}
}  // namespace

std::vector<ElementSet> minimal_subsemigroups(const FiniteSemigroup& s) {
  const int n = s.order();
  std::vector<ElementSet> out;
  if (n <= 20) {
    // Closed sets in popcount order; a closed set is minimal iff no earlier
    // minimal one sits strictly inside it (every nonempty closed set
    // contains a minimal one).
    std::vector<std::uint64_t> minimal_masks;
    std::vector<std::vector<std::uint64_t>> by_popcount(static_cast<std::size_t>(n) + 1);
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t m = 1; m < end; ++m)
      if (mask_closed(s, m))
        by_popcount[static_cast<std::size_t>(std::popcount(m))].push_back(m);
    for (const auto& bucket : by_popcount)
      for (std::uint64_t m : bucket) {
        bool has_smaller = false;
        for (std::uint64_t mm : minimal_masks)
          if (mm != m && (mm & ~m) == 0) {
            has_smaller = true;
            break;
          }
        if (!has_smaller) minimal_masks.push_back(m);
      }
    out.reserve(minimal_masks.size());
    for (std::uint64_t m : minimal_masks) out.push_back(ElementSet::from_mask(s, m));
  } else {
    for (int e : idempotents(s).members()) out.push_back(ElementSet::singleton(s, e));
  }
  return out;
}

}  // namespace oplus
