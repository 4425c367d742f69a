#include "mlq/series.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mlq {

namespace {

long long checked_add(long long x, long long y) {
  long long r;
  if (__builtin_add_overflow(x, y, &r)) throw DomainError("series coefficient overflow");
  return r;
}

long long checked_mul(long long x, long long y) {
  long long r;
  if (__builtin_mul_overflow(x, y, &r)) throw DomainError("series coefficient overflow");
  return r;
}

void trim(std::vector<long long>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

TruncatedSeries::TruncatedSeries(int cap) : cap_(cap) {
  if (cap < 0) throw DomainError("negative series cap");
  c_.assign(static_cast<size_t>(cap) + 1, 0);
}

TruncatedSeries TruncatedSeries::one(int cap) {
  TruncatedSeries s(cap);
  s.c_[0] = 1;
  return s;
}

void TruncatedSeries::add_at(int degree, long long value) {
  if (degree < 0) throw DomainError("negative series degree");
  if (degree > cap_) return;
  c_[static_cast<size_t>(degree)] = checked_add(c_[static_cast<size_t>(degree)], value);
}

TruncatedSeries operator+(const TruncatedSeries& x, const TruncatedSeries& y) {
  TruncatedSeries out(std::min(x.cap_, y.cap_));
  for (int i = 0; i <= out.cap_; ++i)
    out.c_[static_cast<size_t>(i)] = checked_add(x[i], y[i]);
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& x, const TruncatedSeries& y) {
  TruncatedSeries out(std::min(x.cap_, y.cap_));
  for (int i = 0; i <= out.cap_; ++i)
    out.c_[static_cast<size_t>(i)] = checked_add(x[i], -y[i]);
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y) {
  TruncatedSeries out(std::min(x.cap_, y.cap_));
  for (int i = 0; i <= out.cap_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; i + j <= out.cap_; ++j) {
      if (y[j] == 0) continue;
      out.add_at(i + j, checked_mul(x[i], y[j]));
    }
  }
  return out;
}

bool operator==(const TruncatedSeries& x, const TruncatedSeries& y) {
  return x.cap_ == y.cap_ && x.c_ == y.c_;
}

void TruncatedSeries::geometric_divide(int k) {
  if (k <= 0) throw DomainError("geometric factor needs a positive exponent");
  for (int i = k; i <= cap_; ++i)
    c_[static_cast<size_t>(i)] =
        checked_add(c_[static_cast<size_t>(i)], c_[static_cast<size_t>(i - k)]);
}

void TruncatedSeries::binomial_multiply(int k) {
  if (k <= 0) throw DomainError("binomial factor needs a positive exponent");
  for (int i = cap_; i >= k; --i)
    c_[static_cast<size_t>(i)] =
        checked_add(c_[static_cast<size_t>(i)], -c_[static_cast<size_t>(i - k)]);
}

TruncatedSeries TruncatedSeries::truncated(int new_cap) const {
  if (new_cap > cap_) throw DomainError("cannot extend a truncated series");
  TruncatedSeries out(new_cap);
  for (int i = 0; i <= new_cap; ++i) out.c_[static_cast<size_t>(i)] = (*this)[i];
  return out;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i <= cap_; ++i) {
    if (i) os << ", ";
    os << (*this)[i];
  }
  os << "]";
  return os.str();
}

std::optional<SeriesMismatch> series_mismatch(const TruncatedSeries& x,
                                              const TruncatedSeries& y) {
  int cap = std::min(x.cap(), y.cap());
  for (int i = 0; i <= cap; ++i)
    if (x[i] != y[i]) return SeriesMismatch{i, x[i], y[i]};
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::vector<long long> upoly_mul(const std::vector<long long>& x,
                                 const std::vector<long long>& y) {
  if (x.empty() || y.empty()) return {};
  std::vector<long long> out(x.size() + y.size() - 1, 0);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) out[i + j] = checked_add(out[i + j], checked_mul(x[i], y[j]));
  }
  trim(out);
  return out;
}

std::vector<long long> upoly_sub(const std::vector<long long>& x,
                                 const std::vector<long long>& y) {
  std::vector<long long> out = x;
  out.resize(std::max(x.size(), y.size()), 0);
  for (size_t i = 0; i < y.size(); ++i) out[i] = checked_add(out[i], -y[i]);
  trim(out);
  return out;
}

std::optional<std::vector<long long>> upoly_try_divide(
    const std::vector<long long>& num, const std::vector<long long>& div) {
  if (div.empty()) throw DomainError("univariate division by zero");
  if (num.empty()) return std::vector<long long>{};
  if (num.size() < div.size()) return std::nullopt;
  std::vector<long long> rem = num;
  std::vector<long long> quot(num.size() - div.size() + 1, 0);
  long long lead = div.back();
  for (size_t i = quot.size(); i-- > 0;) {
    long long top = rem[i + div.size() - 1];
    if (top % lead != 0) return std::nullopt;
    long long q = top / lead;
    quot[i] = q;
    if (q != 0)
      for (size_t j = 0; j < div.size(); ++j)
        rem[i + j] = checked_add(rem[i + j], -checked_mul(q, div[j]));
  }
  for (long long c : rem)
    if (c != 0) return std::nullopt;
  trim(quot);
  return quot;
}

std::vector<long long> upoly_binomial(int k) {
  std::vector<long long> v(static_cast<size_t>(k) + 1, 0);
  v[0] = 1;
  v[static_cast<size_t>(k)] = -1;
  return v;
}

// ---------------------------------------------------------------------------

ClosedForm ClosedForm::monomial(int degree) {
  ClosedForm cf;
  cf.num.assign(static_cast<size_t>(degree) + 1, 0);
  cf.num[static_cast<size_t>(degree)] = 1;
  return cf;
}

ClosedForm& ClosedForm::normalize() {
  trim(num);
  std::sort(den.begin(), den.end());
  for (int k : den)
    if (k <= 0) throw DomainError("denominator exponents must be positive");
  return *this;
}

std::string ClosedForm::to_string() const {
  std::ostringstream os;
  os << "(";
  bool printed = false;
  for (size_t i = 0; i < num.size(); ++i) {
    if (num[i] == 0) continue;
    long long c = num[i];
    if (printed)
      os << (c < 0 ? " - " : " + ");
    else if (c < 0)
      os << "-";
    printed = true;
    long long mag = c < 0 ? -c : c;
    if (mag != 1 || i == 0) os << mag;
    if (i > 0) {
      if (mag != 1) os << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  if (!printed) os << "0";
  os << ")";
  for (int k : den) os << "/(1-t^" << k << ")";
  return os.str();
}

ClosedForm cf_mul(const ClosedForm& x, const ClosedForm& y) {
  ClosedForm out;
  out.num = upoly_mul(x.num, y.num);
  out.den = x.den;
  out.den.insert(out.den.end(), y.den.begin(), y.den.end());
  return out.normalize();
}

TruncatedSeries expand_closed_form(const ClosedForm& cf, int cap) {
  TruncatedSeries s(cap);
  for (size_t i = 0; i < cf.num.size() && i <= static_cast<size_t>(cap); ++i)
    s.add_at(static_cast<int>(i), cf.num[i]);
  for (int k : cf.den) s.geometric_divide(k);
  return s;
}

bool closed_form_equal(const ClosedForm& x, const ClosedForm& y) {
  // x.num * y.den-product == y.num * x.den-product, with common factors of the
  // denominator multisets cancelled first to keep degrees down.
  std::multiset<int> dx(x.den.begin(), x.den.end()), dy(y.den.begin(), y.den.end());
  for (auto it = dx.begin(); it != dx.end();) {
    auto jt = dy.find(*it);
    if (jt != dy.end()) {
      dy.erase(jt);
      it = dx.erase(it);
    } else {
      ++it;
    }
  }
  std::vector<long long> lhs = x.num, rhs = y.num;
  for (int k : dy) lhs = upoly_mul(lhs, upoly_binomial(k));
  for (int k : dx) rhs = upoly_mul(rhs, upoly_binomial(k));
  return lhs == rhs;
}

bool closed_form_sum_equals(const std::vector<ClosedForm>& parts,
                            const ClosedForm& whole) {
  // Least common denominator: max multiplicity of each exponent.
  std::map<int, int> common;
  auto fold = [&](const std::vector<int>& den) {
    std::map<int, int> mult;
    for (int k : den) ++mult[k];
    for (auto [k, c] : mult) common[k] = std::max(common[k], c);
  };
  for (const auto& p : parts) fold(p.den);
  fold(whole.den);

  auto lifted = [&](const ClosedForm& cf) {
    std::map<int, int> mult;
    for (int k : cf.den) ++mult[k];
    std::vector<long long> out = cf.num;
    for (auto [k, c] : common) {
      int extra = c - mult[k];
      for (int i = 0; i < extra; ++i) out = upoly_mul(out, upoly_binomial(k));
    }
    return out;
  };

  std::vector<long long> sum;
  for (const auto& p : parts) {
    std::vector<long long> part = lifted(p);
    sum.resize(std::max(sum.size(), part.size()), 0);
    for (size_t i = 0; i < part.size(); ++i) sum[i] = checked_add(sum[i], part[i]);
  }
  trim(sum);
  return sum == lifted(whole);
}

CiReport ci_diagnostic(const ClosedForm& cf) {
  CiReport rep;
  std::vector<long long> residual = cf.num;
  trim(residual);
  std::multiset<int> den(cf.den.begin(), cf.den.end());

  // Largest exponent first: when the numerator really is a product of
  // (1-t^k) factors, any stripped exponent K satisfies K | a_i for some
  // factor, so K <= max a_i and the maximal divisible K is exactly max a_i.
  bool progress = true;
  std::vector<int> stripped;
  while (progress && residual.size() > 1) {
    progress = false;
    for (int k = static_cast<int>(residual.size()) - 1; k >= 1; --k) {
      if (auto q = upoly_try_divide(residual, upoly_binomial(k))) {
        residual = *q;
        stripped.push_back(k);
        progress = true;
        break;
      }
    }
  }

  // Cancel stripped numerator factors against the denominator.
  for (auto it = stripped.begin(); it != stripped.end();) {
    auto jt = den.find(*it);
    if (jt != den.end()) {
      den.erase(jt);
      it = stripped.erase(it);
    } else {
      ++it;
    }
  }
  std::sort(stripped.begin(), stripped.end());
  rep.numerator_exponents = stripped;
  rep.denominator_exponents.assign(den.begin(), den.end());
  rep.residual = residual;

  if (residual == std::vector<long long>{1}) {
    rep.complete_intersection = true;
    return rep;
  }
  for (size_t i = 0; i < residual.size(); ++i) {
    long long c = residual[i];
    if (c >= 2 || c <= -2) {
      rep.obstruction_degree = static_cast<int>(i);
      rep.obstruction_coeff = c;
      break;
    }
  }
  return rep;
}

std::string CiReport::to_string() const {
  std::ostringstream os;
  if (complete_intersection) {
    os << "complete-intersection shape: numerator exponents {";
    for (size_t i = 0; i < numerator_exponents.size(); ++i)
      os << (i ? "," : "") << numerator_exponents[i];
    os << "}, denominator exponents {";
    for (size_t i = 0; i < denominator_exponents.size(); ++i)
      os << (i ? "," : "") << denominator_exponents[i];
    os << "}";
  } else {
    os << "not of complete-intersection shape; residual numerator [";
    for (size_t i = 0; i < residual.size(); ++i) os << (i ? "," : "") << residual[i];
    os << "]";
    if (obstruction_degree >= 0)
      os << "; first coefficient of size >= 2 is " << obstruction_coeff
         << " at degree " << obstruction_degree;
  }
  return os.str();
}

}  // namespace mlq
