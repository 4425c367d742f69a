#ifndef MLQ_SYMFUN_HPP
#define MLQ_SYMFUN_HPP

#include <vector>

#include "mlq/poly.hpp"

namespace mlq {

// e_0..e_n of the given values (e_0 = 1), all over `ring`.
std::vector<Poly> elementary_symmetric(const RingPtr& ring,
                                       const std::vector<Poly>& values);

// p_1..p_count, p_k = sum of k-th powers of the values.
std::vector<Poly> power_sums(const RingPtr& ring, const std::vector<Poly>& values,
                             int count);

// Newton's identities: reconstruct e_0..e_n from p_1..p_n.
std::vector<Poly> elementary_from_power_sums(const RingPtr& ring,
                                             const std::vector<Poly>& p);

}  // namespace mlq

#endif  // MLQ_SYMFUN_HPP
