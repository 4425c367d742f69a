#include "mlq/symfun.hpp"

namespace mlq {

std::vector<Poly> elementary_symmetric(const RingPtr& ring,
                                       const std::vector<Poly>& values) {
  // e[j] over a growing prefix: appending v maps e[j] -> e[j] + v*e[j-1].
  std::vector<Poly> e{Poly::constant(ring, 1)};
  for (const Poly& v : values) {
    e.push_back(Poly(ring));
    for (size_t j = e.size() - 1; j >= 1; --j) e[j] += v * e[j - 1];
  }
  return e;
}

std::vector<Poly> power_sums(const RingPtr& ring, const std::vector<Poly>& values,
                             int count) {
  if (count < 0) throw DomainError("negative power-sum count");
  std::vector<Poly> p;
  std::vector<Poly> pw(values.size(), Poly::constant(ring, 1));
  for (int k = 1; k <= count; ++k) {
    Poly sum(ring);
    for (size_t i = 0; i < values.size(); ++i) {
      pw[i] *= values[i];
      sum += pw[i];
    }
    p.push_back(sum);
  }
  return p;
}

std::vector<Poly> elementary_from_power_sums(const RingPtr& ring,
                                             const std::vector<Poly>& p) {
  // k*e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i
  std::vector<Poly> e{Poly::constant(ring, 1)};
  for (size_t k = 1; k <= p.size(); ++k) {
    Poly acc(ring);
    for (size_t i = 1; i <= k; ++i) {
      Poly term = e[k - i] * p[i - 1];
      acc += (i % 2 == 1) ? term : -term;
    }
    e.push_back(acc.scaled(Coeff(Rat(1, static_cast<unsigned long>(k)))));
  }
  return e;
}

}  // namespace mlq
