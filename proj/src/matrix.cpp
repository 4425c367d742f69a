#include "mlq/matrix.hpp"

#include <unordered_map>

namespace mlq {

PolyMatrix::PolyMatrix(RingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
  e_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Poly(ring_));
}

PolyMatrix PolyMatrix::identity(RingPtr ring, int n) {
  PolyMatrix m(ring, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Poly::constant(ring, Coeff(1));
  return m;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix out = *this;
  for (auto& p : out.e_) p = -p;
  return out;
}

static void check_shape(const PolyMatrix& x, const PolyMatrix& y, bool mul) {
  bool ok = mul ? x.cols() == y.rows()
                : (x.rows() == y.rows() && x.cols() == y.cols());
  if (!ok) throw DomainError("matrix shape mismatch");
}

PolyMatrix operator+(const PolyMatrix& x, const PolyMatrix& y) {
  check_shape(x, y, false);
  PolyMatrix out = x;
  for (size_t i = 0; i < out.e_.size(); ++i) out.e_[i] += y.e_[i];
  return out;
}

PolyMatrix operator-(const PolyMatrix& x, const PolyMatrix& y) {
  check_shape(x, y, false);
  PolyMatrix out = x;
  for (size_t i = 0; i < out.e_.size(); ++i) out.e_[i] -= y.e_[i];
  return out;
}

PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
  check_shape(x, y, true);
  PolyMatrix out(x.ring_, x.rows_, y.cols_);
  for (int i = 0; i < x.rows_; ++i)
    for (int k = 0; k < x.cols_; ++k) {
      const Poly& xik = x.at(i, k);
      if (xik.is_zero()) continue;  // the matrices here are mostly banded
      for (int j = 0; j < y.cols_; ++j) {
        if (y.at(k, j).is_zero()) continue;
        out.at(i, j) += xik * y.at(k, j);
      }
    }
  return out;
}

bool operator==(const PolyMatrix& x, const PolyMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
  for (size_t i = 0; i < x.e_.size(); ++i)
    if (x.e_[i] != y.e_[i]) return false;
  return true;
}

PolyMatrix PolyMatrix::scaled(const Coeff& c) const {
  PolyMatrix out = *this;
  for (auto& p : out.e_) p = p.scaled(c);
  return out;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix out(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

PolyMatrix PolyMatrix::pow(int e) const {
  if (rows_ != cols_) throw DomainError("power of a non-square matrix");
  if (e < 0) throw DomainError("negative matrix power");
  PolyMatrix result = identity(ring_, rows_);
  PolyMatrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Poly PolyMatrix::trace() const {
  if (rows_ != cols_) throw DomainError("trace of a non-square matrix");
  Poly t(ring_);
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

PolyMatrix commutator(const PolyMatrix& x, const PolyMatrix& y) {
  return x * y - y * x;
}

Poly det_fraction_free(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const int n = m.rows();
  const RingPtr& ring = m.ring();
  if (n == 0) return Poly::constant(ring, Coeff(1));
  PolyMatrix a = m;
  bool negate = false;
  Poly prev = Poly::constant(ring, Coeff(1));
  for (int k = 0; k + 1 < n; ++k) {
    if (a.at(k, k).is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (!a.at(i, k).is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return Poly(ring);  // whole column zero
      for (int j = k; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Poly num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
        // Sylvester's identity makes this division exact; a failure would mean
        // a bug in the elimination, so let it throw.
        a.at(i, j) = exact_divide(num, prev);
      }
      a.at(i, k) = Poly(ring);
    }
    prev = a.at(k, k);
  }
  return negate ? -a.at(n - 1, n - 1) : a.at(n - 1, n - 1);
}

namespace {

// det of the minor using the rows [start..n) and the columns set in mask.
Poly det_minor(const PolyMatrix& m, int start, unsigned mask,
               std::unordered_map<unsigned, Poly>& memo) {
  const int n = m.rows();
  if (start == n) return Poly::constant(m.ring(), Coeff(1));
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  Poly result(m.ring());
  int sign = 1;
  for (int j = 0; j < n; ++j) {
    if (!(mask & (1u << j))) continue;
    if (!m.at(start, j).is_zero()) {
      Poly sub = det_minor(m, start + 1, mask & ~(1u << j), memo);
      Poly contrib = m.at(start, j) * sub;
      result += sign > 0 ? contrib : -contrib;
    }
    sign = -sign;
  }
  memo.emplace(mask, result);
  return result;
}

}  // namespace

Poly det_cofactor(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const int n = m.rows();
  if (n > 20) throw DomainError("cofactor determinant limited to small sizes");
  std::unordered_map<unsigned, Poly> memo;
  return det_minor(m, 0, n == 0 ? 0 : (1u << n) - 1, memo);
}

Poly char_poly(const PolyMatrix& m, int lambda_var) {
  if (m.rows() != m.cols()) throw DomainError("char poly of a non-square matrix");
  const RingPtr& ring = m.ring();
  PolyMatrix lam = PolyMatrix::identity(ring, m.rows())
                       .map([&](const Poly& p) {
                         return p * Poly::variable(ring, lambda_var);
                       });
  return det_fraction_free(lam - m);
}

}  // namespace mlq
