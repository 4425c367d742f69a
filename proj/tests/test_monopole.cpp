// Lattice-sum tests: grading degrees, residual-gauge factors, agreement with
// the reference closed forms, the region decomposition, and the benchmark
// comparison that is expected to disagree.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "mlq/monopole.hpp"

using namespace mlq;

TEST_CASE("spec validation") {
  CHECK_NOTHROW(validate_spec({2, 1, 1}));
  CHECK_NOTHROW(validate_spec({3, 4, 2}));
  CHECK_THROWS_AS(validate_spec({4, 1, 1}), DomainError);
  CHECK_THROWS_AS(validate_spec({2, 0, 1}), DomainError);
  CHECK_THROWS_AS(validate_spec({2, 1, 0}), DomainError);
}

TEST_CASE("grading degree") {
  for (int r = 1; r <= 4; ++r) {
    GaugeSpec spec{2, r, 1};
    CHECK(monopole_degree({0, 0}, spec) == 0);
    CHECK(monopole_degree({1, 0}, spec) == 2 * r - 1);
    CHECK(monopole_degree({3, 3}, spec) == 6);
    CHECK(monopole_degree({-2, -2}, spec) == 4);
    CHECK(monopole_degree({1, -1}, spec) == 2 + (2 * r - 2) * 2);
  }
  GaugeSpec framed{2, 2, 3};
  CHECK(monopole_degree({1, 0}, framed) == 3 + 2);
  GaugeSpec g3{3, 2, 1};
  // (1,0,-1): sum |n_i| = 2, sum_{i<j} (n_i - n_j) = 1 + 2 + 1 = 4.
  CHECK(monopole_degree({1, 0, -1}, g3) == 2 + 2 * 4);
  CHECK_THROWS_AS(monopole_degree({0, 1}, GaugeSpec{2, 1, 1}), DomainError);
  CHECK_THROWS_AS(monopole_degree({1, 0, 0}, GaugeSpec{2, 1, 1}), DomainError);
  CHECK(is_dominant({2, 2, -1}));
  CHECK(!is_dominant({1, 2}));
}

TEST_CASE("residual-gauge factors") {
  CHECK(classical_factor({5, 5}).den == std::vector<int>{2, 4});
  CHECK(classical_factor({3, 1}).den == std::vector<int>{2, 2});
  CHECK(classical_factor({2, 2, 2}).den == std::vector<int>{2, 4, 6});
  CHECK(classical_factor({4, 0, -4}).den == std::vector<int>{2, 2, 2});
  CHECK(classical_factor({7, 7, 0}).den == std::vector<int>{2, 2, 4});
}

TEST_CASE("rank-2 lattice sum equals its closed form") {
  GaugeSpec spec{2, 2, 1};
  TruncatedSeries sum = truncated_hilbert(spec, 12);
  CHECK(sum == expand_closed_form(closed_form_gl2(2), 12));
  // Frozen prefix.
  std::vector<long long> expect{1, 0, 3, 2, 6, 6, 13, 12};
  for (int i = 0; i < 8; ++i) CHECK(sum[i] == expect[static_cast<size_t>(i)]);
  // The t^2 coefficient stays 3 for every loop count.
  for (int r = 2; r <= 6; ++r)
    CHECK(truncated_hilbert({2, r, 1}, 2)[2] == 3);
}

TEST_CASE("rank-2 region decomposition") {
  GaugeSpec spec{2, 3, 1};
  auto regions = hilbert_regions(spec);
  REQUIRE(regions.size() == 5);
  TruncatedSeries total(14);
  std::vector<ClosedForm> forms;
  for (const auto& reg : regions) {
    TruncatedSeries part = truncated_hilbert_region(spec, reg, 14);
    CHECK(part == expand_closed_form(reg.form, 14));
    total = total + part;
    forms.push_back(reg.form);
  }
  CHECK(total == truncated_hilbert(spec, 14));
  CHECK(closed_form_sum_equals(forms, closed_form_gl2(3)));
  // The cells tile the dominant cone: every sample lies in exactly one.
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= a; ++b) {
      int hits = 0;
      for (const auto& reg : regions) hits += reg.contains({a, b}) ? 1 : 0;
      CHECK(hits == 1);
    }
  CHECK_THROWS_AS(hilbert_regions({2, 2, 2}), DomainError);
}

TEST_CASE("rank-3 lattice sum equals its closed form") {
  GaugeSpec spec{3, 2, 1};
  TruncatedSeries sum = truncated_hilbert(spec, 18);
  CHECK(sum == expand_closed_form(closed_form_gl3(2), 18));
}

TEST_CASE("rank-3 region decomposition") {
  GaugeSpec spec{3, 2, 1};
  auto regions = hilbert_regions(spec);
  REQUIRE(regions.size() == 13);
  TruncatedSeries total(12);
  std::vector<ClosedForm> forms;
  for (const auto& reg : regions) {
    TruncatedSeries part = truncated_hilbert_region(spec, reg, 12);
    CHECK(part == expand_closed_form(reg.form, 12));
    total = total + part;
    forms.push_back(reg.form);
  }
  CHECK(total == truncated_hilbert(spec, 12));
  CHECK(closed_form_sum_equals(forms, closed_form_gl3(2)));
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= a; ++b)
      for (long c = -3; c <= b; ++c) {
        int hits = 0;
        for (const auto& reg : regions) hits += reg.contains({a, b, c}) ? 1 : 0;
        CHECK(hits == 1);
      }
}

TEST_CASE("framing-2 smoke: degrees are even and the first ones are fixed") {
  for (int rank : {2, 3}) {
    GaugeSpec spec{rank, 2, 2};
    TruncatedSeries s = truncated_hilbert(spec, 12);
    CHECK(s[0] == 1);
    CHECK(s[2] == 1);
    for (int i = 1; i <= 11; i += 2) CHECK(s[i] == 0);
  }
}

TEST_CASE("enumeration safety bound") {
  CHECK_THROWS_AS(truncated_hilbert({2, 2, 1}, 201), DomainError);
  CHECK_NOTHROW(truncated_hilbert({2, 2, 1}, 0));
  CHECK_THROWS_AS(truncated_hilbert({2, 2, 1}, -1), DomainError);
}

TEST_CASE("benchmark slice series disagrees where expected") {
  // r = 3: first difference at degree 2 (ours 1, benchmark 3).
  auto ours3 = expand_closed_form(closed_form_gl3(3), 20);
  auto bench3 = expand_closed_form(nilpotent_slice_series(3), 20);
  auto mm3 = series_mismatch(ours3, bench3);
  REQUIRE(mm3.has_value());
  CHECK(mm3->degree == 2);
  CHECK(mm3->lhs == 1);
  CHECK(mm3->rhs == 3);
  // r = 4: first difference at degree 3 (ours 2, benchmark 0).
  auto ours4 = expand_closed_form(closed_form_gl3(4), 20);
  auto bench4 = expand_closed_form(nilpotent_slice_series(4), 20);
  auto mm4 = series_mismatch(ours4, bench4);
  REQUIRE(mm4.has_value());
  CHECK(mm4->degree == 3);
  CHECK(mm4->lhs == 2);
  CHECK(mm4->rhs == 0);
  CHECK_THROWS_AS(nilpotent_slice_series(5), DomainError);
  CHECK_THROWS_AS(nilpotent_slice_series(2), DomainError);
}

TEST_CASE("closed-form degree guards") {
  CHECK_THROWS_AS(closed_form_gl2(0), DomainError);
  CHECK_THROWS_AS(closed_form_gl3(0), DomainError);
  // Both operands of the benchmark comparison start at 1.
  CHECK(expand_closed_form(closed_form_gl2(4), 0)[0] == 1);
  CHECK(expand_closed_form(closed_form_gl3(4), 0)[0] == 1);
}
