#ifndef MLQ_MATRIX_HPP
#define MLQ_MATRIX_HPP

#include <vector>

#include "mlq/poly.hpp"

namespace mlq {

// Dense matrix of polynomials (the matrices here are small; the polynomials
// are where the weight is).  Indices are 0-based.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr ring, int rows, int cols);
  static PolyMatrix identity(RingPtr ring, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const RingPtr& ring() const { return ring_; }

  Poly& at(int i, int j) { return e_[static_cast<size_t>(i * cols_ + j)]; }
  const Poly& at(int i, int j) const { return e_[static_cast<size_t>(i * cols_ + j)]; }

  PolyMatrix operator-() const;
  friend PolyMatrix operator+(const PolyMatrix& x, const PolyMatrix& y);
  friend PolyMatrix operator-(const PolyMatrix& x, const PolyMatrix& y);
  friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y);
  friend bool operator==(const PolyMatrix& x, const PolyMatrix& y);
  friend bool operator!=(const PolyMatrix& x, const PolyMatrix& y) { return !(x == y); }

  PolyMatrix scaled(const Coeff& c) const;
  PolyMatrix transposed() const;
  PolyMatrix pow(int e) const;  // square matrices, e >= 0
  Poly trace() const;
  bool is_zero() const;

  // Apply f to every entry.
  template <class F>
  PolyMatrix map(F&& f) const {
    PolyMatrix out = *this;
    for (auto& p : out.e_) p = f(p);
    return out;
  }

 private:
  RingPtr ring_;
  int rows_ = 0, cols_ = 0;
  std::vector<Poly> e_;
};

PolyMatrix commutator(const PolyMatrix& x, const PolyMatrix& y);  // xy - yx

// Fraction-free elimination determinant (row swaps allowed, every division
// exact by construction).  Works over any of our polynomial rings.
Poly det_fraction_free(const PolyMatrix& m);

// Laplace expansion with column-mask memoization; the independent cross-check
// for small sizes.
Poly det_cofactor(const PolyMatrix& m);

// det(lambda I - m); the ring must contain the given lambda variable.
Poly char_poly(const PolyMatrix& m, int lambda_var);

}  // namespace mlq

#endif  // MLQ_MATRIX_HPP
