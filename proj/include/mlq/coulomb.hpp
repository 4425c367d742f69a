#ifndef MLQ_COULOMB_HPP
#define MLQ_COULOMB_HPP

#include <map>
#include <memory>
#include <string>

#include "mlq/localized.hpp"
#include "mlq/matrix.hpp"

namespace mlq {

// Deliberate one-sign / one-exponent perturbations used as negative controls.
// A healthy suite must catch every one of them.
enum class Mutation {
  None,
  FlipX2,            // x2 := -(-1)^r u1 u2
  FlipY2,            // y2 := -(-1)^r v1 v2
  FlipX1Inner,       // inner sign of x1: u1 + (-1)^r u2
  FlipY1Inner,       // inner sign of y1: v1 + (-1)^r v2
  RelationExponent,  // (w^2 - 4 x2 y2)^(r+1) instead of ^r
  RedundancySign,    // recombination identities with -(-1)^r E2 F1 / -(-1)^r F2 E1
  LiteralRescale,    // trace-form rescale 4^r/sqrt(2) instead of sqrt(2)/2^r
};

// Darboux chart of the branch: u1, u2 invertible, v1, v2 polynomial,
// {u_i, v_j} = delta_ij.  The deformed chart adds parameters z1..zr and
// localizes at s = u1 v1 - u2 v2.
struct EtaleChart {
  int r = 1;
  bool flavored = false;
  RingPtr ring;
  Localized::PivotPtr pivot;  // s, shared by every localized value on the chart
  Poly u1, u2, v1, v2, s;

  Poly z(int i) const;  // z_i, 1-based; deformed charts only
};

EtaleChart make_chart(int r, bool flavored);

// The five distinguished functions on the chart.  Plain charts give genuine
// Laurent polynomials (pivot power 0); deformed x1, y1 carry pivot power 1.
struct GeneratorSet {
  Localized x1, y1, x2, y2, w;

  const Localized& by_name(std::string_view name) const;
};

GeneratorSet build_generators(const EtaleChart& chart, Mutation mut = Mutation::None);

// {f, g} = sum_i (df/du_i dg/dv_i - df/dv_i dg/du_i).
Localized poisson_bracket(const EtaleChart& chart, const Localized& f,
                          const Localized& g);

// Abstract polynomial ring on the generator symbols x1, y1, x2, y2, w (plus
// z1..zr when flavored), optionally over a quadratic extension.
RingPtr generator_ring(int r, bool flavored, const Ext& ext = {});

// (w^2 - 4 x2 y2)^r - (x1^2 y2 + x2 y1^2 + w x1 y1); RelationExponent bumps
// the exponent by one.
Poly branch_relation(const RingPtr& ring, int r, Mutation mut = Mutation::None);

// x1^2 y2 + x2 y1^2 + w x1 y1
//   - sum over m, n >= 0 with m + n even of
//     (-1)^{mn} sigma_m sigma_n (w^2 - 4 x2 y2)^{r - (m+n)/2},
// sigma_k the elementary symmetric polynomials of z1..zr (so k <= r).
Poly deformed_relation(const RingPtr& ring, int r);

// Plug the chart images of x1..w into an abstract polynomial; z's pass
// through by name.
Localized eval_on_chart(const Poly& p, const EtaleChart& chart,
                        const GeneratorSet& gen);

// Every check returns the empty string on success and a witness otherwise.

// The (u, w)-presentation of the generators (with u-inverses) agrees with the
// chart values after w_i -> u_i v_i, including the localized deformed pair.
std::string check_generators(int r, bool flavored);

// w1 w2 = E2 F2, E1[w] = (w1+w2) E1 + (-1)^r E2 F1,
// F1[w] = (w1+w2) F1 + (-1)^r F2 E1.
std::string check_redundancy(int r, Mutation mut = Mutation::None);

// The plain branch relation vanishes on the generators.
std::string check_relation(int r, Mutation mut = Mutation::None);

// The deformed relation vanishes on the deformed generators.
std::string check_deformed_relation(int r);

// The nine tabulated brackets; records the computed {x1, y1} under
// "bracket.x1y1" (no closed form is asserted for it).
std::string check_bracket_table(int r,
                                std::map<std::string, std::string>* derived = nullptr);

// Jacobi identity on all ten generator triples.
std::string check_jacobi(int r);

// ad(-w) weights (2, -2, 1, -1), homogeneity of the generators on the chart,
// and degree-4r homogeneity of the relation under deg x1 = deg y1 = 2r-1,
// deg x2 = deg y2 = deg w = 2.
std::string check_grading(int r);

// With N = [[-x2, w/2], [w/2, -y2]], Om = [[0,-1],[1,0]], A = (x1, y1)^T:
// tr((N Om)^{2r}) - A^T Om N Om A, after x1, y1 -> sqrt(2)/2^r * (x1, y1),
// is a nonzero constant multiple of the branch relation; the constant is
// recorded under "kappa".  LiteralRescale uses 4^r/sqrt(2) instead.
std::string check_trace_form(int r, Mutation mut = Mutation::None,
                             std::map<std::string, std::string>* derived = nullptr);

// The trace-form equation is preserved by A -> SA, N -> S N S^T for
// S = identity, a rotation, and a generic determinant-1 matrix (symbolic
// entries, d = (1 + bc)/a in the ring localized at a).
std::string check_sl2_invariance(int r);

// Every monomial of sum_{m+n=2k} (-1)^{mn} sigma_m sigma_n has only even
// exponents, 0 <= k <= r.
std::string check_sigma_parity(int r, int k);

// z -> 0 degenerates the deformed generators to the plain ones and the
// deformed relation to minus the branch relation.
std::string check_specialization(int r);

}  // namespace mlq

#endif  // MLQ_COULOMB_HPP
