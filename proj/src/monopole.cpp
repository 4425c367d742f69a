#include "mlq/monopole.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace mlq {

namespace {

// Guard against runaway lattice enumeration; cap 200 is far beyond anything
// the reference comparisons need and still enumerates in well under a second.
constexpr int kMaxTruncation = 200;

std::vector<long long> one_minus(int k) { return upoly_binomial(k); }

}  // namespace

void validate_spec(const GaugeSpec& spec) {
  if (spec.rank != 2 && spec.rank != 3)
    throw DomainError("gauge rank must be 2 or 3");
  if (spec.loops < 1) throw DomainError("loop count must be >= 1");
  if (spec.framing < 1) throw DomainError("framing must be >= 1");
}

bool is_dominant(const Coweight& lam) {
  for (size_t i = 1; i < lam.size(); ++i)
    if (lam[i - 1] < lam[i]) return false;
  return true;
}

long monopole_degree(const Coweight& lam, const GaugeSpec& spec) {
  if (static_cast<int>(lam.size()) != spec.rank)
    throw DomainError("coweight length does not match the gauge rank");
  if (!is_dominant(lam)) throw DomainError("coweight is not dominant");
  long deg = 0;
  for (long n : lam) deg += spec.framing * std::labs(n);
  for (size_t i = 0; i < lam.size(); ++i)
    for (size_t j = i + 1; j < lam.size(); ++j)
      deg += (2 * spec.loops - 2) * (lam[i] - lam[j]);
  return deg;
}

ClosedForm classical_factor(const Coweight& lam) {
  if (!is_dominant(lam)) throw DomainError("coweight is not dominant");
  ClosedForm cf;
  size_t i = 0;
  while (i < lam.size()) {
    size_t j = i;
    while (j < lam.size() && lam[j] == lam[i]) ++j;
    for (size_t k = 1; k <= j - i; ++k) cf.den.push_back(2 * static_cast<int>(k));
    i = j;
  }
  return cf.normalize();
}

namespace {

// Shared enumeration core: walk the dominant box, optionally filter, bucket
// the t^degree counts by residual-gauge denominator, then expand each bucket
// with one strided-prefix-sum pass per denominator factor.
TruncatedSeries enumerate_lattice(const GaugeSpec& spec, int cap,
                                  const std::function<bool(const Coweight&)>* filter) {
  validate_spec(spec);
  if (cap < 0) throw DomainError("truncation cap must be nonnegative");
  if (cap > kMaxTruncation)
    throw DomainError("truncation cap exceeds the enumeration safety bound");

  const long box = cap / spec.framing;  // degree >= framing * max|n_i|
  std::map<std::vector<int>, TruncatedSeries> buckets;

  auto visit = [&](const Coweight& lam) {
    if (filter && !(*filter)(lam)) return;
    long deg = monopole_degree(lam, spec);
    if (deg > cap) return;
    ClosedForm cf = classical_factor(lam);
    auto it = buckets.find(cf.den);
    if (it == buckets.end())
      it = buckets.emplace(cf.den, TruncatedSeries(cap)).first;
    it->second.add_at(static_cast<int>(deg), 1);
  };

  if (spec.rank == 2) {
    for (long n1 = -box; n1 <= box; ++n1)
      for (long n2 = -box; n2 <= n1; ++n2) visit({n1, n2});
  } else {
    for (long n1 = -box; n1 <= box; ++n1)
      for (long n2 = -box; n2 <= n1; ++n2)
        for (long n3 = -box; n3 <= n2; ++n3) visit({n1, n2, n3});
  }

  TruncatedSeries total(cap);
  for (auto& [den, series] : buckets) {
    for (int k : den) series.geometric_divide(k);
    total = total + series;
  }
  return total;
}

}  // namespace

TruncatedSeries truncated_hilbert(const GaugeSpec& spec, int cap) {
  return enumerate_lattice(spec, cap, nullptr);
}

TruncatedSeries truncated_hilbert_region(const GaugeSpec& spec,
                                         const HilbertRegion& region, int cap) {
  return enumerate_lattice(spec, cap, &region.contains);
}

ClosedForm closed_form_gl2(int r) {
  if (r < 1) throw DomainError("loop count must be >= 1");
  ClosedForm cf;
  cf.num = one_minus(4 * r);
  cf.den = {2, 2, 2, 2 * r - 1, 2 * r - 1};
  return cf.normalize();
}

ClosedForm closed_form_gl3(int r) {
  if (r < 1) throw DomainError("loop count must be >= 1");
  std::vector<long long> inner(static_cast<size_t>(8 * r - 2) + 1, 0);
  inner[0] = 1;
  inner[static_cast<size_t>(4 * r - 2)] = 1;
  inner[static_cast<size_t>(4 * r - 1)] = 2;
  inner[static_cast<size_t>(4 * r)] = 1;
  inner[static_cast<size_t>(8 * r - 2)] = 1;
  ClosedForm cf;
  cf.num = upoly_mul(one_minus(4 * r), inner);
  cf.den = {2, 3, 3, 4, 4 * r - 3, 4 * r - 3, 4 * r - 2};
  return cf.normalize();
}

namespace {

ClosedForm region_form(std::vector<long long> num, std::vector<int> den) {
  ClosedForm cf;
  cf.num = std::move(num);
  cf.den = std::move(den);
  return cf.normalize();
}

std::vector<long long> tpow(int d) {
  std::vector<long long> p(static_cast<size_t>(d) + 1, 0);
  p[static_cast<size_t>(d)] = 1;
  return p;
}

}  // namespace

std::vector<HilbertRegion> hilbert_regions(const GaugeSpec& spec) {
  validate_spec(spec);
  if (spec.framing != 1)
    throw DomainError("region decomposition is defined for framing 1 only");
  const int r = spec.loops;
  std::vector<HilbertRegion> regions;

  if (spec.rank == 2) {
    const int a = 2 * r - 1;
    regions.push_back({"equal-nonneg", region_form({1}, {2, 2, 4}),
                       [](const Coweight& n) { return n[0] == n[1] && n[1] >= 0; }});
    regions.push_back({"equal-neg", region_form(tpow(2), {2, 2, 4}),
                       [](const Coweight& n) { return n[0] == n[1] && n[1] < 0; }});
    regions.push_back({"strict-nonneg", region_form(tpow(a), {2, 2, 2, a}),
                       [](const Coweight& n) { return n[0] > n[1] && n[1] >= 0; }});
    regions.push_back({"strict-nonpos", region_form(tpow(a), {2, 2, 2, a}),
                       [](const Coweight& n) { return n[0] > n[1] && n[0] <= 0; }});
    regions.push_back({"strict-split", region_form(tpow(2 * a), {2, 2, a, a}),
                       [](const Coweight& n) { return n[0] > 0 && 0 > n[1]; }});
    return regions;
  }

  // Rank 3.  Cells follow the coincidence pattern of the entries and the
  // placement of 0; p = 4r-3 and q = 4r-2 are the two sector strides.
  const int p = 4 * r - 3;
  const int q = 4 * r - 2;
  auto all_eq = [](const Coweight& n) { return n[0] == n[1] && n[1] == n[2]; };
  auto upper = [](const Coweight& n) { return n[0] == n[1] && n[1] > n[2]; };
  auto lower = [](const Coweight& n) { return n[0] > n[1] && n[1] == n[2]; };
  auto strict = [](const Coweight& n) { return n[0] > n[1] && n[1] > n[2]; };

  regions.push_back({"all-equal-nonneg", region_form({1}, {2, 4, 6, 3}),
                     [=](const Coweight& n) { return all_eq(n) && n[0] >= 0; }});
  regions.push_back({"all-equal-neg", region_form(tpow(3), {2, 4, 6, 3}),
                     [=](const Coweight& n) { return all_eq(n) && n[0] < 0; }});

  regions.push_back({"upper-pair-nonneg", region_form(tpow(q), {2, 2, 4, 3, q}),
                     [=](const Coweight& n) { return upper(n) && n[2] >= 0; }});
  regions.push_back({"upper-pair-nonpos", region_form(tpow(p), {2, 2, 4, 3, p}),
                     [=](const Coweight& n) { return upper(n) && n[0] <= 0; }});
  regions.push_back({"upper-pair-split", region_form(tpow(p + q), {2, 2, 4, p, q}),
                     [=](const Coweight& n) { return upper(n) && n[0] > 0 && 0 > n[2]; }});

  regions.push_back({"lower-pair-nonneg", region_form(tpow(p), {2, 2, 4, 3, p}),
                     [=](const Coweight& n) { return lower(n) && n[2] >= 0; }});
  regions.push_back({"lower-pair-nonpos", region_form(tpow(q), {2, 2, 4, 3, q}),
                     [=](const Coweight& n) { return lower(n) && n[0] <= 0; }});
  regions.push_back({"lower-pair-split", region_form(tpow(p + q), {2, 2, 4, p, q}),
                     [=](const Coweight& n) { return lower(n) && n[0] > 0 && 0 > n[2]; }});

  regions.push_back({"strict-nonneg", region_form(tpow(p + q), {2, 2, 2, 3, p, q}),
                     [=](const Coweight& n) { return strict(n) && n[2] >= 0; }});
  regions.push_back({"strict-nonpos", region_form(tpow(p + q), {2, 2, 2, 3, p, q}),
                     [=](const Coweight& n) { return strict(n) && n[0] <= 0; }});
  regions.push_back({"strict-two-pos", region_form(tpow(2 * p + q), {2, 2, 2, p, p, q}),
                     [=](const Coweight& n) { return strict(n) && n[1] > 0 && 0 > n[2]; }});
  regions.push_back({"strict-two-neg", region_form(tpow(2 * p + q), {2, 2, 2, p, p, q}),
                     [=](const Coweight& n) { return strict(n) && n[0] > 0 && 0 > n[1]; }});
  regions.push_back({"strict-zero-middle", region_form(tpow(2 * p), {2, 2, 2, p, p}),
                     [=](const Coweight& n) { return strict(n) && n[1] == 0; }});
  return regions;
}

ClosedForm nilpotent_slice_series(int r) {
  ClosedForm cf;
  if (r == 3) {
    cf.num = upoly_mul(one_minus(8), one_minus(12));
    cf.den = {2, 2, 2, 4, 4, 4, 4, 4};
  } else if (r == 4) {
    cf.num = upoly_mul(one_minus(12), one_minus(16));
    cf.den = {2, 4, 4, 4, 4, 4, 6, 6};
  } else {
    throw DomainError("benchmark slice series is tabulated for r = 3, 4 only");
  }
  return cf.normalize();
}

}  // namespace mlq
