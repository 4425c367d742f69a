#include "mlq/localized.hpp"

namespace mlq {

Localized::Localized(Poly num, int power, PivotPtr pivot)
    : num_(std::move(num)), power_(power), pivot_(std::move(pivot)) {
  if (power_ < 0) throw PivotError("negative pivot power");
  if (power_ > 0 && !pivot_) throw PivotError("positive pivot power without a pivot");
  if (pivot_) {
    if (pivot_->is_zero()) throw PivotError("zero pivot");
    if (num_.ring() && !num_.ring()->same_as(*pivot_->ring()))
      throw PivotError("pivot and numerator live in different rings");
  }
}

static void check_pivots_equal(const Poly& a, const Poly& b) {
  if (!(a == b)) throw PivotError("values localized at different pivots");
}

Localized::PivotPtr merge_pivots(const Localized& x, const Localized& y) {
  if (x.pivot() && y.pivot() && x.pivot() != y.pivot())
    check_pivots_equal(*x.pivot(), *y.pivot());
  return x.pivot() ? x.pivot() : y.pivot();
}

Localized Localized::operator-() const { return with_same_frame(-num_); }

Localized operator+(const Localized& x, const Localized& y) {
  auto pivot = merge_pivots(x, y);
  if (x.power_ == y.power_) return Localized(x.num_ + y.num_, x.power_, pivot);
  const Localized& low = x.power_ < y.power_ ? x : y;
  const Localized& high = x.power_ < y.power_ ? y : x;
  if (!pivot) throw PivotError("power mismatch without a pivot");
  return Localized(low.num_ * pivot->pow(high.power_ - low.power_) + high.num_,
                   high.power_, pivot);
}

Localized operator-(const Localized& x, const Localized& y) { return x + (-y); }

Localized operator*(const Localized& x, const Localized& y) {
  return Localized(x.num_ * y.num_, x.power_ + y.power_, merge_pivots(x, y));
}

Localized Localized::pow(int e) const {
  if (e < 0) throw DomainError("negative localized power; invert first");
  return Localized(num_.pow(e), power_ * e, pivot_);
}

bool operator==(const Localized& x, const Localized& y) {
  auto pivot = merge_pivots(x, y);
  if (x.power_ == y.power_) return x.num_ == y.num_;
  if (!pivot) throw PivotError("power mismatch without a pivot");
  // p / s^j == q / s^k  iff  p s^k == q s^j
  return x.num_ * pivot->pow(y.power_) == y.num_ * pivot->pow(x.power_);
}

Localized Localized::derivative(int var) const {
  if (power_ == 0) return Localized(num_.derivative(var), 0, pivot_);
  const Poly& s = *pivot_;
  Poly n = num_.derivative(var) * s - num_.scaled(Coeff(power_)) * s.derivative(var);
  return Localized(std::move(n), power_ + 1, pivot_);
}

Localized Localized::derivative(std::string_view name) const {
  return derivative(num_.ring()->index(name));
}

std::optional<Localized> Localized::try_invert() const {
  if (is_zero()) return std::nullopt;
  // Strip pivot powers from the numerator: num = core * s^j.
  Poly core = num_;
  int j = 0;
  if (pivot_) {
    while (core.nterms() > 1) {
      if (auto q = try_divide(core, *pivot_)) {
        core = *q;
        ++j;
      } else {
        break;
      }
    }
  }
  if (core.nterms() != 1) return std::nullopt;
  const Term& t = core.lead();
  const RingPtr& ring = core.ring();
  Mono inv(t.m.size());
  for (size_t v = 0; v < t.m.size(); ++v) {
    inv[v] = -t.m[v];
    if (inv[v] < 0 && ring->kind(static_cast<int>(v)) != VarKind::Laurent)
      return std::nullopt;  // would need a genuine inverse of a Poly variable
  }
  Poly core_inv = Poly::term(ring, coeff_inv(t.c, ring->extension()), std::move(inv));
  // (core * s^j / s^k)^-1 = core^-1 * s^(k-j); fold negative powers of s into
  // the numerator.
  int p = j - power_;
  if (p < 0) return Localized(core_inv * pivot_->pow(-p), 0, pivot_);
  if (p > 0 && !pivot_) throw PivotError("positive pivot power without a pivot");
  return Localized(std::move(core_inv), p, pivot_);
}

std::optional<Poly> Localized::as_poly() const {
  if (power_ == 0) return num_;
  if (auto q = try_divide(num_, pivot_->pow(power_))) return q;
  return std::nullopt;
}

std::string Localized::to_string() const {
  if (power_ == 0) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + pivot_->to_string() + ")^" +
         std::to_string(power_);
}

Localized substitute(const Poly& p, const RingPtr& target,
                     const std::map<std::string, Localized>& assign) {
  if (!target) throw DomainError("null target ring");
  const RingPtr& src = p.ring();
  Localized::PivotPtr pivot;
  for (const auto& [name, val] : assign) {
    if (src->find(name) == std::nullopt)
      throw UnknownVariable("assignment for variable '" + name +
                            "' absent from the source ring");
    if (!val.num().ring()->same_as(*target))
      throw RingMismatch("assigned value not over the target ring");
    if (val.pivot()) {
      if (pivot && pivot != val.pivot()) check_pivots_equal(*pivot, *val.pivot());
      if (!pivot) pivot = val.pivot();
    }
  }

  // val^e cache, including inverses for negative exponents.
  std::map<std::pair<std::string, int32_t>, Localized> powers;
  auto power = [&](const std::string& name, int32_t e) -> const Localized& {
    auto key = std::make_pair(name, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    const Localized& base = assign.at(name);
    Localized value{Poly(target)};
    if (e >= 0) {
      value = base.pow(e);
    } else {
      auto inv = base.try_invert();
      if (!inv)
        throw DomainError("substituting a non-invertible value into negative "
                          "exponent of '" + name + "'");
      value = inv->pow(-e);
    }
    return powers.emplace(key, std::move(value)).first->second;
  };

  Localized out{Poly(target)};
  for (const auto& t : p.terms()) {
    Localized term_val{Poly::constant(target, t.c)};
    for (int v = 0; v < src->nvars(); ++v) {
      int32_t e = t.m[static_cast<size_t>(v)];
      if (e == 0) continue;
      const std::string& name = src->name(v);
      if (assign.count(name)) {
        term_val *= power(name, e);
      } else {
        int tv = target->index(name);
        if (e < 0 && target->kind(tv) != VarKind::Laurent)
          throw DomainError("negative exponent on non-Laurent variable '" + name +
                            "' in the target ring");
        Mono m(static_cast<size_t>(target->nvars()), 0);
        m[static_cast<size_t>(tv)] = e;
        term_val *= Localized(Poly::term(target, Coeff(1), std::move(m)));
      }
    }
    out += term_val;
  }
  // Make sure the result carries the shared pivot even if no assigned value
  // with positive power survived; harmless when null.
  if (pivot && !out.pivot()) out = Localized(out.num(), out.power(), pivot);
  return out;
}

}  // namespace mlq
