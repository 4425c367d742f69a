#ifndef MLQ_MONOPOLE_HPP
#define MLQ_MONOPOLE_HPP

#include <functional>
#include <string>
#include <vector>

#include "mlq/coeff.hpp"
#include "mlq/series.hpp"

namespace mlq {

// One gauge theory: GL(rank) with `loops` adjoint copies and `framing`
// fundamental copies.  Only rank 2 and 3 carry reference closed forms.
struct GaugeSpec {
  int rank = 2;     // 2 or 3
  int loops = 1;    // r >= 1
  int framing = 1;  // m >= 1
};

void validate_spec(const GaugeSpec& spec);  // throws DomainError

// Magnetic charge sector: a nonincreasing integer tuple of length rank.
using Coweight = std::vector<long>;

bool is_dominant(const Coweight& lam);

// Grading degree of the lam-sector:
//   framing * sum |n_i|  +  (2*loops - 2) * sum_{i<j} (n_i - n_j).
// The first part is the framing-weight contribution, the second the loop
// weights minus twice the positive roots.  Throws on a non-dominant tuple.
long monopole_degree(const Coweight& lam, const GaugeSpec& spec);

// Residual-gauge factor of the lam-sector: for each block of k equal entries
// a factor prod_{i=1..k} 1/(1-t^{2i}).
ClosedForm classical_factor(const Coweight& lam);

// Full lattice sum, truncated at `cap`: sum over dominant lam of
// t^degree(lam) * classical_factor(lam).  The degree dominates
// framing * max|n_i|, so the box |n_i| <= cap/framing is exhaustive.
TruncatedSeries truncated_hilbert(const GaugeSpec& spec, int cap);

// Reference closed forms for framing 1:
//   rank 2: (1-t^{4r}) / ((1-t^2)^3 (1-t^{2r-1})^2)
//   rank 3: (1-t^{4r})(1 + t^{4r-2} + 2t^{4r-1} + t^{4r} + t^{8r-2})
//           / ((1-t^2)(1-t^3)^2 (1-t^4)(1-t^{4r-3})^2 (1-t^{4r-2}))
ClosedForm closed_form_gl2(int r);
ClosedForm closed_form_gl3(int r);

// Partition of the dominant cone by entry coincidences and sign patterns.
// Each cell carries its own exact closed form (residual-gauge factor
// included); the cells partition the cone and their forms sum to the total.
struct HilbertRegion {
  std::string name;
  ClosedForm form;
  std::function<bool(const Coweight&)> contains;
};

// The 5 cells for rank 2, the 13 cells for rank 3.  Framing must be 1.
std::vector<HilbertRegion> hilbert_regions(const GaugeSpec& spec);

// Lattice sum restricted to one cell (cross-check against region.form).
TruncatedSeries truncated_hilbert_region(const GaugeSpec& spec,
                                         const HilbertRegion& region, int cap);

// Known Hilbert series of the Slodowy slice S(2r-4,2,2), the benchmark the
// rank-3 series is compared against.  Defined for r = 3 and r = 4 only:
//   r=3: (1-t^8)(1-t^12) / ((1-t^2)^3 (1-t^4)^5)
//   r=4: (1-t^12)(1-t^16) / ((1-t^2)(1-t^4)^5 (1-t^6)^2)
ClosedForm nilpotent_slice_series(int r);

}  // namespace mlq

#endif  // MLQ_MONOPOLE_HPP
