#ifndef MLQ_LOCALIZED_HPP
#define MLQ_LOCALIZED_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "mlq/poly.hpp"

namespace mlq {

struct PivotError : Error {
  using Error::Error;
};

// Value num / pivot^power in the ring localized at a fixed pivot polynomial.
// Values are deliberately never gcd-reduced: equality compares
// p * s^k == q * s^j by cross-multiplication, so a representative with extra
// pivot powers is the same value.
class Localized {
 public:
  using PivotPtr = std::shared_ptr<const Poly>;

  Localized() = default;
  // Plain polynomial (power 0, no pivot attached).
  explicit Localized(Poly num) : num_(std::move(num)) {}
  Localized(Poly num, int power, PivotPtr pivot);

  const Poly& num() const { return num_; }
  int power() const { return power_; }
  const PivotPtr& pivot() const { return pivot_; }

  bool is_zero() const { return num_.is_zero(); }

  Localized operator-() const;
  friend Localized operator+(const Localized& x, const Localized& y);
  friend Localized operator-(const Localized& x, const Localized& y);
  friend Localized operator*(const Localized& x, const Localized& y);
  Localized& operator+=(const Localized& y) { return *this = *this + y; }
  Localized& operator-=(const Localized& y) { return *this = *this - y; }
  Localized& operator*=(const Localized& y) { return *this = *this * y; }

  Localized pow(int e) const;  // e >= 0
  Localized scaled(const Coeff& c) const { return with_same_frame(num_.scaled(c)); }

  // Cross-multiplied equality; needs a pivot only when the powers differ.
  friend bool operator==(const Localized& x, const Localized& y);
  friend bool operator!=(const Localized& x, const Localized& y) { return !(x == y); }

  // d/dv (p / s^k) = (p' s - k p s') / s^(k+1); plain values stay plain.
  Localized derivative(int var) const;
  Localized derivative(std::string_view name) const;

  // Inverse exists when the numerator is a unit of the localized ring, i.e.
  // coefficient * invertible-monomial * pivot^j.
  std::optional<Localized> try_invert() const;

  // Plain polynomial value when power == 0 or the pivot divides exactly.
  std::optional<Poly> as_poly() const;

  std::string to_string() const;

 private:
  Localized with_same_frame(Poly p) const { return Localized(std::move(p), power_, pivot_); }

  Poly num_;
  int power_ = 0;
  PivotPtr pivot_;
};

// The shared pivot of two values (they must not disagree).
Localized::PivotPtr merge_pivots(const Localized& x, const Localized& y);

// Substitute variables of p by localized values living on `target`.
// Assignments are keyed by variable name; unassigned variables map into the
// target by name.  Negative exponents require the assigned value to be
// invertible in the localized ring.
Localized substitute(const Poly& p, const RingPtr& target,
                     const std::map<std::string, Localized>& assign);

}  // namespace mlq

#endif  // MLQ_LOCALIZED_HPP
