#ifndef MLQ_COEFF_HPP
#define MLQ_COEFF_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace mlq {

using Rat = mpq_class;

// Quadratic extension parameter: coefficients live in Q when absent, in
// Q(sqrt(d)) when present.  Shared per ring; see Ring.
using Ext = std::optional<Rat>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Bad arguments or an unsupported request (division by zero, radical part in a
// plain ring, non-invertible element, ...).
struct DomainError : Error {
  using Error::Error;
};
// Two values from structurally different rings were combined.
struct RingMismatch : Error {
  using Error::Error;
};

// Element a + b*sqrt(d).  mpq_class keeps itself canonical (lowest terms,
// positive denominator), so componentwise comparison is exact equality.
struct Coeff {
  Rat a{0};
  Rat b{0};

  Coeff() = default;
  Coeff(long n) : a(n) {}  // implicit: integer literals appear everywhere
  explicit Coeff(Rat r) : a(std::move(r)) {}
  Coeff(Rat ra, Rat rb) : a(std::move(ra)), b(std::move(rb)) {}

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }

  friend bool operator==(const Coeff& x, const Coeff& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const Coeff& x, const Coeff& y) { return !(x == y); }
};

inline Coeff coeff_neg(const Coeff& x) { return Coeff(-x.a, -x.b); }

inline Coeff coeff_add(const Coeff& x, const Coeff& y) {
  return Coeff(x.a + y.a, x.b + y.b);
}

inline Coeff coeff_sub(const Coeff& x, const Coeff& y) {
  return Coeff(x.a - y.a, x.b - y.b);
}

inline void check_ext(const Coeff& x, const Ext& d) {
  if (!d && x.b != 0)
    throw DomainError("radical coefficient in a ring without an extension");
}

// (a + b sqrt(d)) (a' + b' sqrt(d)) = (aa' + bb'd) + (ab' + a'b) sqrt(d)
inline Coeff coeff_mul(const Coeff& x, const Coeff& y, const Ext& d) {
  if (x.b == 0 && y.b == 0) return Coeff(x.a * y.a);
  check_ext(x, d);
  check_ext(y, d);
  return Coeff(x.a * y.a + x.b * y.b * *d, x.a * y.b + y.a * x.b);
}

// Inverse via the conjugate: 1/(a + b sqrt(d)) = (a - b sqrt(d))/(a^2 - b^2 d).
// Defined whenever the norm a^2 - b^2 d is nonzero.
inline Coeff coeff_inv(const Coeff& x, const Ext& d) {
  if (x.b == 0) {
    if (x.a == 0) throw DomainError("division by zero coefficient");
    return Coeff(1 / x.a);
  }
  check_ext(x, d);
  Rat norm = x.a * x.a - x.b * x.b * *d;
  if (norm == 0)
    throw DomainError("coefficient with zero norm is not invertible");
  return Coeff(x.a / norm, -x.b / norm);
}

inline Coeff coeff_div(const Coeff& x, const Coeff& y, const Ext& d) {
  return coeff_mul(x, coeff_inv(y, d), d);
}

// Canonical sign used when printing: the rational part decides unless it is
// zero, then the radical part does.
inline bool coeff_is_negative(const Coeff& x) {
  return x.a != 0 ? x.a < 0 : x.b < 0;
}

// Canonical text.  Plain rationals as `p/q` (or `p`); radical values as
// `(A + B*sqrt(D))` with A always present and B's sign folded into the joiner.
std::string coeff_to_string(const Coeff& x, const Ext& d);

}  // namespace mlq

#endif  // MLQ_COEFF_HPP
