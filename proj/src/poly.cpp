#include "mlq/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mlq {

bool mono_lex_greater(const Mono& x, const Mono& y) {
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) return x[i] > y[i];
  return false;
}

namespace {

struct MonoGreater {
  bool operator()(const Mono& x, const Mono& y) const {
    return mono_lex_greater(x, y);
  }
};

void check_same_ring(const Poly& x, const Poly& y) {
  if (!x.ring() || !y.ring()) throw DomainError("operation on ring-less polynomial");
  if (x.ring() == y.ring()) return;
  if (!x.ring()->same_as(*y.ring()))
    throw RingMismatch("polynomials from different rings");
}

void validate_term(const Ring& ring, const Term& t) {
  if (static_cast<int>(t.m.size()) != ring.nvars())
    throw DomainError("exponent vector length does not match ring");
  for (int v = 0; v < ring.nvars(); ++v)
    if (t.m[static_cast<size_t>(v)] < 0 && ring.kind(v) != VarKind::Laurent)
      throw DomainError("negative exponent on non-Laurent variable '" +
                        ring.name(v) + "'");
  check_ext(t.c, ring.extension());
}

// Shared accumulator for sums of many terms; flushes to the canonical sorted
// representation once.
class Accum {
 public:
  explicit Accum(const RingPtr& ring) : ring_(ring) {}

  void add(Mono m, const Coeff& c) {
    if (c.is_zero()) return;
    auto it = acc_.find(m);
    if (it == acc_.end()) {
      acc_.emplace(std::move(m), c);
    } else {
      it->second = coeff_add(it->second, c);
      if (it->second.is_zero()) acc_.erase(it);
    }
  }

  void add(const Poly& p) {
    for (const auto& t : p.terms()) add(t.m, t.c);
  }

  Poly take() {
    std::vector<Term> terms;
    terms.reserve(acc_.size());
    for (auto& [m, c] : acc_) terms.push_back({m, c});
    return Poly::from_terms(ring_, std::move(terms));
  }

 private:
  RingPtr ring_;
  std::map<Mono, Coeff, MonoGreater> acc_;
};

}  // namespace

Poly Poly::constant(RingPtr ring, Coeff c) {
  return term(std::move(ring), std::move(c), Mono{});
}

Poly Poly::variable(RingPtr ring, int var) {
  if (!ring || var < 0 || var >= ring->nvars())
    throw DomainError("variable index out of range");
  Mono m(static_cast<size_t>(ring->nvars()), 0);
  m[static_cast<size_t>(var)] = 1;
  return term(std::move(ring), Coeff(1), std::move(m));
}

Poly Poly::variable(RingPtr ring, std::string_view name) {
  if (!ring) throw DomainError("null ring");
  int v = ring->index(name);
  return variable(std::move(ring), v);
}

Poly Poly::term(RingPtr ring, Coeff c, Mono m) {
  if (!ring) throw DomainError("null ring");
  m.resize(static_cast<size_t>(ring->nvars()), 0);
  std::vector<Term> ts;
  ts.push_back({std::move(m), std::move(c)});
  return from_terms(std::move(ring), std::move(ts));
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  if (!ring) throw DomainError("null ring");
  for (auto& t : terms) validate_term(*ring, t);
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return mono_lex_greater(x.m, y.m); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().m == t.m)
      out.back().c = coeff_add(out.back().c, t.c);
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().c.is_zero()) out.pop_back();
  }
  Poly p(std::move(ring));
  p.terms_ = std::move(out);
  return p;
}

const Term& Poly::lead() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.front();
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (auto e : terms_[0].m)
    if (e != 0) return false;
  return true;
}

Coeff Poly::constant_value() const {
  if (terms_.empty()) return Coeff(0);
  if (!is_constant()) throw DomainError("polynomial is not constant");
  return terms_[0].c;
}

Poly Poly::operator-() const {
  Poly out(ring_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.m, coeff_neg(t.c)});
  return out;
}

Poly operator+(const Poly& x, const Poly& y) {
  check_same_ring(x, y);
  Poly out(x.ring_);
  out.terms_.reserve(x.terms_.size() + y.terms_.size());
  size_t i = 0, j = 0;
  while (i < x.terms_.size() && j < y.terms_.size()) {
    const Term& a = x.terms_[i];
    const Term& b = y.terms_[j];
    if (a.m == b.m) {
      Coeff c = coeff_add(a.c, b.c);
      if (!c.is_zero()) out.terms_.push_back({a.m, std::move(c)});
      ++i, ++j;
    } else if (mono_lex_greater(a.m, b.m)) {
      out.terms_.push_back(a);
      ++i;
    } else {
      out.terms_.push_back(b);
      ++j;
    }
  }
  for (; i < x.terms_.size(); ++i) out.terms_.push_back(x.terms_[i]);
  for (; j < y.terms_.size(); ++j) out.terms_.push_back(y.terms_[j]);
  return out;
}

Poly operator-(const Poly& x, const Poly& y) { return x + (-y); }

Poly operator*(const Poly& x, const Poly& y) {
  check_same_ring(x, y);
  const Ext& d = x.ring_->extension();
  Accum acc(x.ring_);
  const size_t n = static_cast<size_t>(x.ring_->nvars());
  Mono m(n);
  for (const auto& a : x.terms_) {
    for (const auto& b : y.terms_) {
      for (size_t v = 0; v < n; ++v) m[v] = a.m[v] + b.m[v];
      acc.add(m, coeff_mul(a.c, b.c, d));
    }
  }
  return acc.take();
}

Poly Poly::scaled(const Coeff& c) const {
  if (c.is_zero()) return Poly(ring_);
  const Ext& d = ring_->extension();
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) ts.push_back({t.m, coeff_mul(t.c, c, d)});
  return from_terms(ring_, std::move(ts));
}

Poly Poly::pow(int e) const {
  if (e < 0) throw DomainError("negative polynomial power");
  Poly result = Poly::constant(ring_, Coeff(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const Poly& x, const Poly& y) {
  check_same_ring(x, y);
  if (x.terms_.size() != y.terms_.size()) return false;
  for (size_t i = 0; i < x.terms_.size(); ++i)
    if (x.terms_[i].m != y.terms_[i].m || x.terms_[i].c != y.terms_[i].c)
      return false;
  return true;
}

Poly Poly::derivative(int var) const {
  if (!ring_ || var < 0 || var >= ring_->nvars())
    throw UnknownVariable("derivative variable out of range");
  std::vector<Term> ts;
  for (const auto& t : terms_) {
    int32_t e = t.m[static_cast<size_t>(var)];
    if (e == 0) continue;
    Term nt = t;
    nt.c = coeff_mul(t.c, Coeff(e), ring_->extension());
    nt.m[static_cast<size_t>(var)] = e - 1;
    ts.push_back(std::move(nt));
  }
  return from_terms(ring_, std::move(ts));
}

Poly Poly::derivative(std::string_view name) const {
  if (!ring_) throw DomainError("null ring");
  return derivative(ring_->index(name));
}

int32_t Poly::max_exp(int var) const {
  int32_t best = 0;
  bool first = true;
  for (const auto& t : terms_) {
    int32_t e = t.m[static_cast<size_t>(var)];
    if (first || e > best) best = e;
    first = false;
  }
  return best;
}

int32_t Poly::min_exp(int var) const {
  int32_t best = 0;
  bool first = true;
  for (const auto& t : terms_) {
    int32_t e = t.m[static_cast<size_t>(var)];
    if (first || e < best) best = e;
    first = false;
  }
  return best;
}

bool Poly::is_homogeneous(const std::vector<long>& weights, long* degree) const {
  if (static_cast<int>(weights.size()) != (ring_ ? ring_->nvars() : 0))
    throw DomainError("weight vector length does not match ring");
  bool first = true;
  long deg = 0;
  for (const auto& t : terms_) {
    long d = 0;
    for (size_t v = 0; v < weights.size(); ++v) d += weights[v] * t.m[v];
    if (first) {
      deg = d;
      first = false;
    } else if (d != deg) {
      return false;
    }
  }
  if (degree) *degree = first ? 0 : deg;
  return true;
}

std::optional<Poly> try_divide(const Poly& p, const Poly& q, Poly* rem) {
  check_same_ring(p, q);
  if (q.is_zero()) throw DomainError("division by zero polynomial");
  const RingPtr& ring = p.ring();
  if (p.is_zero()) return Poly(ring);
  const int n = ring->nvars();

  // Per-variable exponent box for the quotient: in an integral domain the
  // extreme v-exponents of q*h are the sums of the extremes of q and h, so any
  // legitimate quotient term lies in [min(p)-min(q), max(p)-max(q)].  A lead
  // term outside the box proves non-divisibility, and the box also bounds the
  // descending chain of candidate monomials, forcing termination.
  Mono lo(static_cast<size_t>(n)), hi(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    lo[static_cast<size_t>(v)] = p.min_exp(v) - q.min_exp(v);
    hi[static_cast<size_t>(v)] = p.max_exp(v) - q.max_exp(v);
    if (ring->kind(v) == VarKind::Poly)
      lo[static_cast<size_t>(v)] = std::max(lo[static_cast<size_t>(v)], 0);
    if (lo[static_cast<size_t>(v)] > hi[static_cast<size_t>(v)]) {
      if (rem) *rem = p;
      return std::nullopt;
    }
  }

  const Ext& d = ring->extension();
  Poly r = p;
  std::vector<Term> quot;
  Mono tm(static_cast<size_t>(n));
  while (!r.is_zero()) {
    const Term& rl = r.lead();
    const Term& ql = q.lead();
    bool in_box = true;
    for (int v = 0; v < n && in_box; ++v) {
      tm[static_cast<size_t>(v)] = rl.m[static_cast<size_t>(v)] - ql.m[static_cast<size_t>(v)];
      in_box = tm[static_cast<size_t>(v)] >= lo[static_cast<size_t>(v)] &&
               tm[static_cast<size_t>(v)] <= hi[static_cast<size_t>(v)];
    }
    if (!in_box) {
      if (rem) *rem = r;
      return std::nullopt;
    }
    Coeff tc = coeff_div(rl.c, ql.c, d);
    r -= Poly::term(ring, tc, tm) * q;
    quot.push_back({tm, std::move(tc)});
  }
  return Poly::from_terms(ring, std::move(quot));
}

Poly exact_divide(const Poly& p, const Poly& q) {
  Poly rem;
  if (auto h = try_divide(p, q, &rem)) return *h;
  throw DivisionError("exact division failed; remainder " + rem.to_string(),
                      std::move(rem));
}

Poly subst_poly(const Poly& p, const std::map<int, Poly>& assign) {
  const RingPtr& ring = p.ring();
  for (const auto& [v, val] : assign) {
    if (v < 0 || v >= ring->nvars()) throw UnknownVariable("bad substitution index");
    check_same_ring(p, val);
  }
  // Cache val^e; exponents in practice are small.
  std::map<std::pair<int, int32_t>, Poly> powers;
  auto power = [&](int v, int32_t e) -> const Poly& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end())
      it = powers.emplace(key, assign.at(v).pow(e)).first;
    return it->second;
  };

  Accum acc(ring);
  for (const auto& t : p.terms()) {
    Mono residual = t.m;
    Poly factor = Poly::constant(ring, t.c);
    for (const auto& [v, val] : assign) {
      int32_t e = residual[static_cast<size_t>(v)];
      if (e == 0) continue;
      if (e < 0)
        throw DomainError("negative exponent on substituted variable '" +
                          ring->name(v) + "'; use the localized substitute");
      residual[static_cast<size_t>(v)] = 0;
      factor *= power(v, e);
    }
    acc.add(factor * Poly::term(ring, Coeff(1), residual));
  }
  return acc.take();
}

Poly transport(const Poly& p, const RingPtr& target) {
  const RingPtr& src = p.ring();
  if (!src || !target) throw DomainError("null ring");
  // Rebind to the target pointer when the tables agree so later pointer
  // fast-paths match.
  if (src->same_as(*target))
    return Poly::from_terms(target, std::vector<Term>(p.terms()));
  bool rational_only = true;
  for (const auto& t : p.terms())
    if (!t.c.is_rational()) rational_only = false;
  if (!rational_only) {
    if (!src->extension() || !target->extension() ||
        *src->extension() != *target->extension())
      throw RingMismatch("transport would change the meaning of sqrt coefficients");
  }
  std::vector<int> map(static_cast<size_t>(src->nvars()));
  for (int v = 0; v < src->nvars(); ++v) {
    // Variables absent from p may be missing in the target.
    auto idx = target->find(src->name(v));
    if (!idx) {
      if (p.max_exp(v) != 0 || p.min_exp(v) != 0)
        throw UnknownVariable("target ring lacks variable '" + src->name(v) + "'");
      map[static_cast<size_t>(v)] = -1;
      continue;
    }
    map[static_cast<size_t>(v)] = *idx;
  }
  std::vector<Term> ts;
  ts.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    Mono m(static_cast<size_t>(target->nvars()), 0);
    for (int v = 0; v < src->nvars(); ++v)
      if (map[static_cast<size_t>(v)] >= 0)
        m[static_cast<size_t>(map[static_cast<size_t>(v)])] = t.m[static_cast<size_t>(v)];
    ts.push_back({std::move(m), t.c});
  }
  return Poly::from_terms(target, std::move(ts));
}

// ---------------------------------------------------------------------------
// canonical text

std::string coeff_to_string(const Coeff& x, const Ext& d) {
  if (x.b == 0) return x.a.get_str();
  check_ext(x, d);
  std::string out = "(" + x.a.get_str();
  out += x.b < 0 ? " - " : " + ";
  Rat mag = abs(x.b);
  out += mag.get_str();
  out += "*sqrt(" + d->get_str() + "))";
  return out;
}

namespace {

std::string term_body(const Ring& ring, const Term& t, const Coeff& c) {
  std::string out = coeff_to_string(c, ring.extension());
  for (int v = 0; v < ring.nvars(); ++v) {
    int32_t e = t.m[static_cast<size_t>(v)];
    if (e == 0) continue;
    out += "*" + ring.name(v);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    bool neg = coeff_is_negative(t.c);
    Coeff mag = neg ? coeff_neg(t.c) : t.c;
    if (i == 0)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += term_body(*ring_, t, mag);
  }
  return out;
}

// ---------------------------------------------------------------------------
// parser (tolerant superset of the canonical form)

namespace {

struct Lexer {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char ch) {
    if (peek() != ch) return false;
    ++pos;
    return true;
  }
  void expect(char ch) {
    if (!eat(ch))
      throw DomainError(std::string("expected '") + ch + "' at offset " +
                        std::to_string(pos) + " in polynomial text");
  }
  std::string number() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw DomainError("expected a number in polynomial text");
    return std::string(s.substr(start, pos - start));
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() &&
        (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      ++pos;
      while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                s[pos] == '_'))
        ++pos;
    }
    if (pos == start) throw DomainError("expected an identifier in polynomial text");
    return std::string(s.substr(start, pos - start));
  }
};

Rat parse_rat(Lexer& lx, bool allow_sign) {
  bool neg = false;
  if (allow_sign) {
    if (lx.eat('-'))
      neg = true;
    else
      lx.eat('+');
  }
  mpz_class num(lx.number());
  mpz_class den(1);
  if (lx.eat('/')) den = mpz_class(lx.number());
  if (den == 0) throw DomainError("zero denominator in polynomial text");
  Rat q(num, den);
  q.canonicalize();
  return neg ? Rat(-q) : q;
}

// sqrt '(' rat ')' — the sqrt keyword has been consumed.
Rat parse_sqrt_arg(Lexer& lx, const Ext& ext) {
  lx.expect('(');
  Rat d = parse_rat(lx, true);
  lx.expect(')');
  if (!ext || *ext != d)
    throw DomainError("sqrt(" + d.get_str() + ") does not match the ring extension");
  return d;
}

// '(' A (+|-) B*sqrt(D) ')'  or  '(' A ')'
Coeff parse_paren_coeff(Lexer& lx, const Ext& ext) {
  Rat a = parse_rat(lx, true);
  char op = lx.peek();
  if (op != '+' && op != '-') {
    lx.expect(')');
    return Coeff(a);
  }
  ++lx.pos;
  Rat b = parse_rat(lx, false);
  lx.expect('*');
  std::string kw = lx.ident();
  if (kw != "sqrt") throw DomainError("expected sqrt in radical coefficient");
  parse_sqrt_arg(lx, ext);
  lx.expect(')');
  return Coeff(a, op == '-' ? Rat(-b) : b);
}

}  // namespace

Poly parse_poly(const RingPtr& ring, std::string_view text) {
  if (!ring) throw DomainError("null ring");
  Lexer lx{text};
  const Ext& ext = ring->extension();
  std::vector<Term> terms;
  bool first = true;
  while (!lx.done()) {
    bool neg = false;
    if (lx.eat('-'))
      neg = true;
    else if (!lx.eat('+') && !first)
      throw DomainError("expected '+' or '-' between terms");
    first = false;

    Coeff c(1);
    Mono m(static_cast<size_t>(ring->nvars()), 0);
    bool more = true;
    while (more) {
      char ch = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c = coeff_mul(c, Coeff(parse_rat(lx, false)), ext);
      } else if (ch == '(') {
        ++lx.pos;
        c = coeff_mul(c, parse_paren_coeff(lx, ext), ext);
      } else {
        std::string name = lx.ident();
        if (name == "sqrt") {
          parse_sqrt_arg(lx, ext);
          c = coeff_mul(c, Coeff(Rat(0), Rat(1)), ext);
        } else {
          int v = ring->index(name);
          int32_t e = 1;
          if (lx.eat('^')) {
            bool eneg = lx.eat('-');
            e = static_cast<int32_t>(std::stol(lx.number()));
            if (eneg) e = -e;
          }
          m[static_cast<size_t>(v)] += e;
        }
      }
      more = lx.eat('*');
    }
    if (neg) c = coeff_neg(c);
    terms.push_back({std::move(m), std::move(c)});
  }
  return Poly::from_terms(ring, std::move(terms));
}

}  // namespace mlq
