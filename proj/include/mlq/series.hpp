#ifndef MLQ_SERIES_HPP
#define MLQ_SERIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "mlq/coeff.hpp"

namespace mlq {

// Formal power series in t truncated at a fixed cap (inclusive).  Integer
// coefficients with overflow-checked arithmetic: everything here stays exact
// or throws.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int cap);
  static TruncatedSeries one(int cap);

  int cap() const { return cap_; }
  long long operator[](int degree) const { return c_[static_cast<size_t>(degree)]; }
  void add_at(int degree, long long value);  // ignores degrees beyond cap
  const std::vector<long long>& coeffs() const { return c_; }

  friend TruncatedSeries operator+(const TruncatedSeries& x, const TruncatedSeries& y);
  friend TruncatedSeries operator-(const TruncatedSeries& x, const TruncatedSeries& y);
  friend TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y);
  friend bool operator==(const TruncatedSeries& x, const TruncatedSeries& y);
  friend bool operator!=(const TruncatedSeries& x, const TruncatedSeries& y) {
    return !(x == y);
  }

  // In-place multiplication by 1/(1-t^k): running sums with stride k.
  void geometric_divide(int k);
  // In-place multiplication by (1-t^k).
  void binomial_multiply(int k);

  TruncatedSeries truncated(int new_cap) const;

  std::string to_string() const;  // "[c0, c1, ...]"

 private:
  int cap_;
  std::vector<long long> c_;
};

struct SeriesMismatch {
  int degree;
  long long lhs, rhs;
};

// First differing coefficient up to the common cap, if any.
std::optional<SeriesMismatch> series_mismatch(const TruncatedSeries& x,
                                              const TruncatedSeries& y);

// Rational form  num(t) / prod_k (1 - t^k), the denominator a multiset of
// exponents.  Numerator coefficients ascending with trailing zeros trimmed.
struct ClosedForm {
  std::vector<long long> num{1};
  std::vector<int> den;  // sorted on normalization

  static ClosedForm monomial(int degree);  // t^degree
  ClosedForm& normalize();
  std::string to_string() const;
};

ClosedForm cf_mul(const ClosedForm& x, const ClosedForm& y);
TruncatedSeries expand_closed_form(const ClosedForm& cf, int cap);

// Exact rational-function equality by cross-multiplication.
bool closed_form_equal(const ClosedForm& x, const ClosedForm& y);

// Exact check that the parts sum to the whole, over the least common
// denominator multiset.
bool closed_form_sum_equals(const std::vector<ClosedForm>& parts,
                            const ClosedForm& whole);

// Diagnostic: try to put a closed form into the shape
// prod_j (1-t^{a_j}) / prod_i (1-t^{b_i}) by repeatedly stripping binomial
// factors from the numerator (largest exponent first, which is the right
// greedy order when the numerator is such a product) and cancelling against
// the denominator.  A residual != 1 is reported as an obstruction with the
// first coefficient of absolute value >= 2 if one exists.
struct CiReport {
  bool complete_intersection = false;
  std::vector<int> numerator_exponents;    // stripped factors, after cancelling
  std::vector<int> denominator_exponents;  // remaining denominator
  std::vector<long long> residual;         // numerator left when stuck
  int obstruction_degree = -1;             // first |coeff| >= 2 in the residual
  long long obstruction_coeff = 0;
  std::string to_string() const;
};

CiReport ci_diagnostic(const ClosedForm& cf);

// Integer univariate helpers (ascending coefficients, trailing zeros trimmed).
std::vector<long long> upoly_mul(const std::vector<long long>& x,
                                 const std::vector<long long>& y);
std::vector<long long> upoly_sub(const std::vector<long long>& x,
                                 const std::vector<long long>& y);
std::optional<std::vector<long long>> upoly_try_divide(
    const std::vector<long long>& num, const std::vector<long long>& div);
std::vector<long long> upoly_binomial(int k);  // 1 - t^k

}  // namespace mlq

#endif  // MLQ_SERIES_HPP
