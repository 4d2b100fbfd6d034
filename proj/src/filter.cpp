#include "oplus/filter.hpp"

namespace oplus {

PFilter::PFilter(FiniteSemigroup ground, ElementSet support)
    : ground_(std::move(ground)), support_(std::move(support)) {
  if (!ground_.same_ground(support_.ground()))
    throw GroundMismatch("filter support over a different semigroup");
  if (support_.empty()) throw EmptySupport("filter support must be nonempty");
}

PFilter PFilter::principal(const FiniteSemigroup& ground, int point) {
  return PFilter(ground, ElementSet::singleton(ground, point));
}

PFilter PFilter::trivial(const FiniteSemigroup& ground) {
  return PFilter(ground, ElementSet::full(ground));
}

bool PFilter::member(const ElementSet& a) const {
  if (!ground_.same_ground(a.ground()))
    throw GroundMismatch("membership query over a different semigroup");
  return support_.subset_of(a);
}

bool PFilter::extends(const PFilter& other) const {
  if (!ground_.same_ground(other.ground_))
    throw GroundMismatch("filter comparison over different semigroups");
  // Finer filter, smaller support.
  return support_.subset_of(other.support_);
}

bool PFilter::operator==(const PFilter& other) const {
  return ground_.same_ground(other.ground_) && support_ == other.support_;
}

ElementSet shift_preimage(const ElementSet& a, int v) {
  const FiniteSemigroup& s = a.ground();
  s.check_element(v);
  std::uint64_t out = 0;
  for (int n = 0; n < s.order(); ++n)
    if (a.contains(s.op(v, n))) out |= std::uint64_t{1} << n;
  return ElementSet::from_mask(s, out);
}

PFilter pseudo_sum(const PFilter& f, const PFilter& g) {
  if (!f.ground().same_ground(g.ground()))
    throw GroundMismatch("pseudo-sum over different semigroups");
  return PFilter(f.ground(), product_set(g.support(), f.support()));
}

bool is_additive(const PFilter& f) {
  for (int v : f.support().members()) {
    const PFilter uv = PFilter::principal(f.ground(), v);
    if (!pseudo_sum(f, uv).extends(f)) return false;
  }
  return true;
}

bool is_additive_char(const PFilter& f) {
  for (int u : f.support().members())
    for (int v : f.support().members()) {
      const PFilter w = pseudo_sum(PFilter::principal(f.ground(), u),
                                   PFilter::principal(f.ground(), v));
      if (!w.extends(f)) return false;
    }
  return true;
}

bool is_idempotent_filter(const PFilter& f) {
  return pseudo_sum(f, f).extends(f);
}

PFilter pullback_extend(const PFilter& f, int v, const PFilter& g) {
  f.ground().check_element(v);
  if (!f.ground().same_ground(g.ground()))
    throw GroundMismatch("pullback over different semigroups");
  const PFilter uv = PFilter::principal(f.ground(), v);
  const ElementSet support = f.support().intersect(shift_preimage(g.support(), v));
  if (!g.extends(pseudo_sum(f, uv))) {
    if (support.empty())
      throw EmptySupport("pullback hypothesis fails and the support is empty");
    throw PreconditionViolated("pullback requires G to refine F (+) U_v");
  }
  return PFilter(f.ground(), support);
}

PFilter fil_of(const FiniteSemigroup& s, const ElementSet& c) {
  if (c.empty()) throw EmptySupport("fil_of of the empty set");
  return PFilter(s, c);
}

ElementSet cl_of(const PFilter& f) { return f.support(); }

int min_element_chooser(const ElementSet& s) { return s.min_element(); }
int max_element_chooser(const ElementSet& s) { return s.max_element(); }

const char* step_rule_name(StepRule r) {
  switch (r) {
    case StepRule::PsiStep: return "psi-step";
    case StepRule::FvvStep: return "fvv-step";
    case StepRule::Fixpoint: return "fixpoint";
  }
  return "?";
}

namespace {
const Chooser& chooser_or_min(const Chooser& c) {
  static const Chooser min = [](const ElementSet& s) { return s.min_element(); };
  return c ? c : min;
}

PsiResult psi_extend_impl(const PFilter& f, const Chooser& choose, int step_base) {
  PFilter cur = f;
  std::vector<ExtensionStep> trace;
  for (;;) {
    const int v = choose(cur.support());
    cur.ground().check_element(v);
    if (!cur.support().contains(v))
      throw Error("chooser returned an element outside the support");
    // Fixed point: U_v refines F (+) U_v, i.e. v lies in v * supp F.
    const ElementSet translated = product_set(
        ElementSet::singleton(cur.ground(), v), cur.support());
    if (translated.contains(v)) {
      return PsiResult{v, cur, std::move(trace)};
    }
    trace.push_back({step_base + static_cast<int>(trace.size()),
                     cur.support().members(), v, StepRule::PsiStep});
    // Non-fixpoint: replace F by F (+) U_v. The new support v * supp F is a
    // strict subset (v escapes), so the loop runs at most |supp F| times.
    cur = pseudo_sum(cur, PFilter::principal(cur.ground(), v));
  }
}
}  // namespace

PsiResult psi_extend(const PFilter& f, const Chooser& chooser) {
  if (!is_additive(f)) throw NotAdditive("psi_extend requires an additive filter");
  return psi_extend_impl(f, chooser_or_min(chooser), 0);
}

ThetaResult theta_extend(const PFilter& f, const Chooser& chooser) {
  if (!is_additive(f)) throw NotAdditive("theta_extend requires an additive filter");
  const Chooser& choose = chooser_or_min(chooser);
  PFilter cur = f;
  std::vector<ExtensionStep> trace;
  int outer = 0;
  for (;;) {
    ++outer;
    PsiResult psi = psi_extend_impl(cur, choose, static_cast<int>(trace.size()));
    for (auto& st : psi.trace) trace.push_back(std::move(st));
    const int v = psi.element;
    if (cur.ground().op(v, v) == v) {
      // U_v refines the pullback of cur toward v, so v is the idempotent.
      trace.push_back({static_cast<int>(trace.size()), cur.support().members(), v,
                       StepRule::Fixpoint});
      return ThetaResult{v, std::move(trace), outer};
    }
    trace.push_back({static_cast<int>(trace.size()), cur.support().members(), v,
                     StepRule::FvvStep});
    // v escapes the new support, which stays nonempty: some w in supp cur has
    // v*w = v by the stabilized choice.
    cur = pullback_extend(cur, v, PFilter::principal(cur.ground(), v));
  }
}

}  // namespace oplus
