#include "oplus/folkman.hpp"

#include "doctest.h"
#include "oplus/fs.hpp"

using namespace oplus;

namespace {
Coloring uniform(std::int64_t n, int r, int color) {
  Coloring c;
  c.n = n;
  c.r = r;
  c.colors.assign(static_cast<std::size_t>(n), color);
  return c;
}
}  // namespace

TEST_CASE("mono_fs_witness") {
  SUBCASE("single color finds the least pair") {
    const auto w = mono_fs_witness(uniform(7, 1, 0), 2);
    REQUIRE(w);
    CHECK(w->color == 0);
    CHECK(w->elements == std::vector<std::int64_t>{1, 2});
  }
  SUBCASE("parity coloring of [1,4] has no pair witness") {
    Coloring c = uniform(4, 2, 0);
    for (std::int64_t i = 1; i <= 4; ++i) c.colors[i - 1] = static_cast<int>(i % 2);
    CHECK(!mono_fs_witness(c, 2));
  }
  SUBCASE("size one always succeeds") {
    const auto w = mono_fs_witness(uniform(5, 3, 2), 1);
    REQUIRE(w);
    CHECK(w->elements == std::vector<std::int64_t>{1});
    CHECK(w->color == 2);
  }
}

TEST_CASE("folkman_check small cases") {
  SUBCASE("size one holds at the first interval") {
    for (int r = 1; r <= 3; ++r) {
      const auto cert = folkman_check(1, 1, r);
      CHECK(cert.kind == FolkmanCertificate::Kind::BoundHolds);
      CHECK(revalidate(cert));
    }
  }
  SUBCASE("one color needs the triangular number exactly") {
    const std::int64_t triangle = 3 * 4 / 2;
    const auto holds = folkman_check(triangle, 3, 1);
    CHECK(holds.kind == FolkmanCertificate::Kind::BoundHolds);
    const auto fails = folkman_check(triangle - 1, 3, 1);
    CHECK(fails.kind == FolkmanCertificate::Kind::CounterColoring);
    CHECK(revalidate(holds));
    CHECK(revalidate(fails));
  }
}

TEST_CASE("two-sided certificate for pairs with two colors") {
  const FolkmanNumber fn = folkman_number(2, 2, 30);
  REQUIRE(fn.value);
  const std::int64_t n_star = *fn.value;
  CHECK(n_star > 1);
  REQUIRE(fn.at_value);
  REQUIRE(fn.below);
  CHECK(fn.at_value->kind == FolkmanCertificate::Kind::BoundHolds);
  CHECK(fn.below->kind == FolkmanCertificate::Kind::CounterColoring);
  CHECK(revalidate(*fn.at_value));
  CHECK(revalidate(*fn.below));

  SUBCASE("the counterexample really is witness-free") {
    REQUIRE(fn.below->counter);
    CHECK(!mono_fs_witness(*fn.below->counter, 2));
  }
  SUBCASE("bound persists above the threshold") {
    for (std::int64_t n = n_star + 1; n <= n_star + 2; ++n)
      CHECK(folkman_check(n, 2, 2).kind == FolkmanCertificate::Kind::BoundHolds);
  }
  SUBCASE("value is stable across reruns") {
    const FolkmanNumber again = folkman_number(2, 2, 30);
    REQUIRE(again.value);
    CHECK(*again.value == n_star);
  }
}

TEST_CASE("certificates are worker-count independent") {
  const FolkmanNumber base = folkman_number(2, 2, 30);
  REQUIRE(base.value);
  SearchOptions four;
  four.workers = 4;
  const auto cert1 = folkman_check(*base.value, 2, 2);
  const auto cert4 = folkman_check(*base.value, 2, 2, four);
  CHECK(cert1.kind == cert4.kind);
  CHECK(cert1.nodes == cert4.nodes);
  REQUIRE(cert1.branches.size() == cert4.branches.size());
  for (std::size_t i = 0; i < cert1.branches.size(); ++i) {
    CHECK(cert1.branches[i].prefix == cert4.branches[i].prefix);
    CHECK(cert1.branches[i].witness.elements == cert4.branches[i].witness.elements);
  }
  const auto counter1 = folkman_check(*base.value - 1, 2, 2);
  const auto counter4 = folkman_check(*base.value - 1, 2, 2, four);
  REQUIRE(counter1.counter);
  REQUIRE(counter4.counter);
  CHECK(counter1.counter->colors == counter4.counter->colors);
}

TEST_CASE("tiny budgets produce Unknown, never a wrong verdict") {
  SearchOptions tiny;
  tiny.node_budget = 3;
  const auto cert = folkman_check(9, 2, 2, tiny);
  CHECK(cert.kind == FolkmanCertificate::Kind::Unknown);
  CHECK(revalidate(cert));

  const FolkmanNumber fn = folkman_number(2, 2, 30, tiny);
  CHECK(!fn.value);
  CHECK(fn.budget_hit);
}

TEST_CASE("partition regularity probe") {
  SUBCASE("full interval at the two-sided bound") {
    const FolkmanNumber fn = folkman_number(2, 2, 30);
    REQUIRE(fn.value);
    const ProbeReport report = fal_partition_regularity_probe(
        WindowSet::full(*fn.value), 2, 2, 25, 0x5eed);
    CHECK(report.trials == 25);
    CHECK(report.violations == 0);
    CHECK(report.interval_backed);
  }
  SUBCASE("one piece is the set itself") {
    const WindowSet a = fs_set(FSGenerator({3, 5, 9}), 20);
    const ProbeReport report = fal_partition_regularity_probe(a, 1, 2, 5, 1);
    CHECK(report.violations == 0);
  }
  SUBCASE("precondition failure") {
    CHECK_THROWS_AS(
        fal_partition_regularity_probe(WindowSet(5, {1}), 2, 2, 5, 1),
        PreconditionNotEstablished);
  }
}
