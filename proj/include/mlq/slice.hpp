#ifndef MLQ_SLICE_HPP
#define MLQ_SLICE_HPP

#include <vector>

#include "mlq/matrix.hpp"
#include "mlq/poly.hpp"

namespace mlq {

// Working ring for the sp(2r) transverse-slice computations:
//   x1, y1, x2, y2, w    slice coordinates
//   b1 .. b_{r-1}        free border coefficients, later solved
//   z1 .. zr             deformation parameters (ignored in the plain mode)
//   lam                  spectral variable for characteristic polynomials
// over Q(sqrt(d)) with d = 2*(2r-3)!; the constant c = 1/sqrt(d) scales the
// border entries of the slice matrix.
struct SliceContext {
  int r = 0;
  RingPtr ring;
  Coeff c;  // 1/sqrt(2*(2r-3)!)
  Poly D;   // w^2 - 4*x2*y2
  Poly S;   // x1^2*y2 + x2*y1^2 + w*x1*y1

  int b_index(int k) const;  // b_k, 1 <= k <= r-1
  int z_index(int i) const;  // z_i, 1 <= i <= r
  int lam_index() const;
};

SliceContext make_slice_context(int r);  // r >= 2

// The constant 2r x 2r matrices: nilpotent ladder e (superdiagonal
// 1..2r-3, then zeros), its partner f (subdiagonal 2r-3..1), the grading
// h = [e,f], and the skew form omega they preserve.  build_omega self-checks
// its corner values and middle signs.
PolyMatrix build_e(const SliceContext& ctx);
PolyMatrix build_f(const SliceContext& ctx);
PolyMatrix build_h(const SliceContext& ctx);
PolyMatrix build_omega(const SliceContext& ctx);

// The slice matrix: e plus the generic element of the f-centralizer,
// coordinates (x1, y1, x2, y2, w, b1..b_{r-1}); B is its leading
// (2r-2) x (2r-2) block.
PolyMatrix build_A(const SliceContext& ctx);
PolyMatrix build_B(const SliceContext& ctx);

// omega*X + X^T*omega == 0.
bool symplectic_member(const PolyMatrix& x, const PolyMatrix& omega);

// traces[j-1] = tr m^j for j = 1..max_power.
std::vector<Poly> power_traces(const PolyMatrix& m, int max_power);

// Solve tr A^{2k} = target_k for b_k, k = 1..r-1 in order.  Plain mode has
// target 0 and additionally factors each solved b_k as alpha_k * D^k;
// deformed mode has target 2*(z_1^{2k} + ... + z_r^{2k}).  Each equation is
// required to be linear in b_k with a constant nonzero coefficient and free
// of later b's; violations throw with a witness.
struct TraceSolve {
  bool flavored = false;
  std::vector<Poly> b;       // b[k-1] = solved b_k
  std::vector<Coeff> alpha;  // plain mode only: b_k = alpha[k-1] * D^k
};
TraceSolve solve_traces(const SliceContext& ctx,
                        const std::vector<Poly>& even_traces, bool flavored);

// Substitute solved b-values (b[k-1] for b_k) into p.
Poly substitute_b(const SliceContext& ctx, const Poly& p,
                  const std::vector<Poly>& b);

// sum over m, n >= 0 with m+n even and m+n < 2r of
// (-1)^{mn} sigma_m sigma_n D^{r-1-(m+n)/2}, sigma = elementary symmetric
// in z_1..z_r.  The predicted value of det B in the deformed mode.
Poly sigma_sum_detB(const SliceContext& ctx);

// det A_solved - (-1)^r (z_1...z_r)^2: the single equation of the deformed
// slice cut out by the spectrum condition.
Poly flavored_relation(const SliceContext& ctx, const Poly& detA_solved);

// Everything heavyweight for one r, computed once and cached (thread-safe).
struct SliceData {
  SliceContext ctx;
  PolyMatrix e, f, h, omega, A, B;
  std::vector<Poly> traces;  // tr A^j, j = 1..2r, free b's
  Poly detA, detB;           // free b's
  TraceSolve plain, flavor;
  Poly detA_plain, detB_plain;
  Poly detA_flavor, detB_flavor;
};
const SliceData& slice_data(int r);

}  // namespace mlq

#endif  // MLQ_SLICE_HPP
