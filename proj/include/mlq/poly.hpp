#ifndef MLQ_POLY_HPP
#define MLQ_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mlq/ring.hpp"

namespace mlq {

// Exponent vector, one slot per ring variable.  Negative entries are legal
// only for Laurent variables.
using Mono = std::vector<int32_t>;

// Canonical term order: lexicographic on the exponent vector, larger first.
bool mono_lex_greater(const Mono& x, const Mono& y);

struct Term {
  Mono m;
  Coeff c;
};

// Sparse multivariate (Laurent) polynomial.  Terms are kept strictly
// descending in the canonical order with no zero coefficients, so equality,
// hashing and printing are structural.
class Poly {
 public:
  Poly() = default;  // no ring; usable only as a container placeholder
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly constant(RingPtr ring, Coeff c);
  static Poly variable(RingPtr ring, int var);
  static Poly variable(RingPtr ring, std::string_view name);
  static Poly term(RingPtr ring, Coeff c, Mono m);
  // Normalizes: sorts, merges duplicates, drops zeros, validates exponents.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  int nterms() const { return static_cast<int>(terms_.size()); }
  const std::vector<Term>& terms() const { return terms_; }
  // Leading term in the canonical order.
  const Term& lead() const;

  bool is_constant() const;
  // Zero polynomial reads as 0; throws if nonconstant.
  Coeff constant_value() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& x, const Poly& y);
  friend Poly operator-(const Poly& x, const Poly& y);
  friend Poly operator*(const Poly& x, const Poly& y);
  Poly& operator+=(const Poly& y) { return *this = *this + y; }
  Poly& operator-=(const Poly& y) { return *this = *this - y; }
  Poly& operator*=(const Poly& y) { return *this = *this * y; }

  Poly scaled(const Coeff& c) const;
  Poly pow(int e) const;  // e >= 0

  friend bool operator==(const Poly& x, const Poly& y);
  friend bool operator!=(const Poly& x, const Poly& y) { return !(x == y); }

  Poly derivative(int var) const;
  Poly derivative(std::string_view name) const;

  int32_t max_exp(int var) const;  // 0 when the variable is absent
  int32_t min_exp(int var) const;

  // True when every term has the same weighted exponent sum; reports it.
  bool is_homogeneous(const std::vector<long>& weights, long* degree = nullptr) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

// Exact-division failure; carries the nonzero remainder the algorithm was
// stuck on as a witness.
struct DivisionError : Error {
  Poly remainder;
  DivisionError(const std::string& msg, Poly rem)
      : Error(msg), remainder(std::move(rem)) {}
};

// Quotient p/q when q divides p exactly, std::nullopt otherwise (with the
// stuck remainder in *rem if given).  Works in the Laurent setting too: the
// candidate quotient monomial is boxed by per-variable degree bounds, which
// both detects non-divisibility and forces termination.
std::optional<Poly> try_divide(const Poly& p, const Poly& q, Poly* rem = nullptr);
Poly exact_divide(const Poly& p, const Poly& q);  // throws DivisionError

// Same-ring substitution var -> polynomial value (simultaneous).  Variables
// being substituted must occur with nonnegative exponents; anything else needs
// the localized substitute in localized.hpp.
Poly subst_poly(const Poly& p, const std::map<int, Poly>& assign);

// Embed into another ring that contains (at least) the same variable names.
// Kinds must agree; the target extension must match unless every coefficient
// is plain rational.
Poly transport(const Poly& p, const RingPtr& target);

// Inverse of to_string (tolerant about spacing; canonical text round-trips
// bit-exactly).
Poly parse_poly(const RingPtr& ring, std::string_view text);

}  // namespace mlq

#endif  // MLQ_POLY_HPP
