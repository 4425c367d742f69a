#include "mlq/slice.hpp"

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "mlq/symfun.hpp"

namespace mlq {

namespace {

Rat binom(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rat(b);
}

}  // namespace

int SliceContext::b_index(int k) const {
  if (k < 1 || k > r - 1) throw DomainError("b index out of range");
  return 5 + (k - 1);
}

int SliceContext::z_index(int i) const {
  if (i < 1 || i > r) throw DomainError("z index out of range");
  return 5 + (r - 1) + (i - 1);
}

int SliceContext::lam_index() const { return 5 + (r - 1) + r; }

SliceContext make_slice_context(int r) {
  if (r < 2) throw DomainError("slice construction needs r >= 2");
  std::vector<std::string> names = {"x1", "y1", "x2", "y2", "w"};
  for (int k = 1; k <= r - 1; ++k) names.push_back("b" + std::to_string(k));
  for (int i = 1; i <= r; ++i) names.push_back("z" + std::to_string(i));
  names.push_back("lam");

  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * r - 3));
  Rat d = Rat(2) * Rat(fact);

  SliceContext ctx;
  ctx.r = r;
  ctx.ring = make_ring(names, Ext(d));
  ctx.c = Coeff(Rat(0), Rat(1) / d);  // 1/sqrt(d) = sqrt(d)/d
  if (coeff_mul(ctx.c, ctx.c, ctx.ring->extension()) != Coeff(Rat(1) / d))
    throw Error("border constant self-check failed: c^2 != 1/d");

  Poly w = Poly::variable(ctx.ring, "w");
  Poly x1 = Poly::variable(ctx.ring, "x1");
  Poly y1 = Poly::variable(ctx.ring, "y1");
  Poly x2 = Poly::variable(ctx.ring, "x2");
  Poly y2 = Poly::variable(ctx.ring, "y2");
  ctx.D = w * w - (x2 * y2).scaled(Coeff(4));
  ctx.S = x1 * x1 * y2 + x2 * y1 * y1 + w * x1 * y1;
  return ctx;
}

namespace {

// 1-based entry access for the block formulas below.
Poly& at1(PolyMatrix& m, int i, int j) { return m.at(i - 1, j - 1); }

Poly konst(const SliceContext& ctx, long v) {
  return Poly::constant(ctx.ring, Coeff(v));
}

}  // namespace

PolyMatrix build_e(const SliceContext& ctx) {
  const int n = 2 * ctx.r;
  PolyMatrix m(ctx.ring, n, n);
  for (int i = 1; i <= n - 3; ++i) at1(m, i, i + 1) = konst(ctx, i);
  return m;
}

PolyMatrix build_f(const SliceContext& ctx) {
  const int n = 2 * ctx.r;
  PolyMatrix m(ctx.ring, n, n);
  for (int i = 1; i <= n - 3; ++i) at1(m, i + 1, i) = konst(ctx, n - 2 - i);
  return m;
}

PolyMatrix build_h(const SliceContext& ctx) {
  const int n = 2 * ctx.r;
  PolyMatrix m(ctx.ring, n, n);
  for (int i = 1; i <= n - 2; ++i) at1(m, i, i) = konst(ctx, n - 1 - 2 * i);
  return m;
}

PolyMatrix build_omega(const SliceContext& ctx) {
  const int r = ctx.r;
  const int n = 2 * r;
  PolyMatrix m(ctx.ring, n, n);
  // Antidiagonal of the leading block: row i holds (-1)^i / binom(2r-3, 2r-2-i)
  // in column 2r-1-i.  The corner 2x2 block is the standard symplectic form.
  for (int i = 1; i <= n - 2; ++i) {
    Rat v = Rat(1) / binom(static_cast<unsigned long>(2 * r - 3),
                           static_cast<unsigned long>(2 * r - 2 - i));
    if (i % 2 == 1) v = -v;
    at1(m, i, n - 1 - i) = Poly::constant(ctx.ring, Coeff(v));
  }
  at1(m, n - 1, n) = konst(ctx, -1);
  at1(m, n, n - 1) = konst(ctx, 1);

  // Transcription anchors: the two corner values of the block and the two
  // middle signs are pinned; everything else is covered by the preservation
  // identities omega*X + X^T*omega = 0 checked elsewhere.
  if (at1(m, 1, n - 2) != konst(ctx, -1) || at1(m, n - 2, 1) != konst(ctx, 1))
    throw Error("skew form corner anchor failed");
  bool mid_hi_neg = coeff_is_negative(at1(m, r - 1, r).constant_value());
  bool mid_lo_neg = coeff_is_negative(at1(m, r, r - 1).constant_value());
  if (mid_hi_neg != (r % 2 == 0) || mid_lo_neg != (r % 2 == 1))
    throw Error("skew form middle sign anchor failed");
  return m;
}

PolyMatrix build_A(const SliceContext& ctx) {
  const int r = ctx.r;
  const int n = 2 * r;
  PolyMatrix m(ctx.ring, n, n);

  for (int i = 1; i <= n - 3; ++i) at1(m, i, i + 1) = konst(ctx, i);

  // Sub-diagonal b-pattern of the leading block: column q carries
  // binom(2r-2-q, 2k-1) * b_k in row q + 2k - 1.
  for (int q = 1; q <= n - 2; ++q)
    for (int k = 1; 2 * k - 1 <= n - 2 - q; ++k) {
      int p = q + 2 * k - 1;
      Poly bk = Poly::variable(ctx.ring, ctx.b_index(k));
      at1(m, p, q) = bk.scaled(Coeff(binom(
          static_cast<unsigned long>(n - 2 - q),
          static_cast<unsigned long>(2 * k - 1))));
    }

  Poly x1 = Poly::variable(ctx.ring, "x1");
  Poly y1 = Poly::variable(ctx.ring, "y1");
  Poly x2 = Poly::variable(ctx.ring, "x2");
  Poly y2 = Poly::variable(ctx.ring, "y2");
  Poly w = Poly::variable(ctx.ring, "w");

  at1(m, n - 2, n - 1) = y1.scaled(ctx.c);
  at1(m, n - 2, n) = x1.scaled(ctx.c);
  at1(m, n - 1, 1) = -x1.scaled(ctx.c);
  at1(m, n - 1, n - 1) = w;
  at1(m, n - 1, n) = x2.scaled(Coeff(-2));
  at1(m, n, 1) = y1.scaled(ctx.c);
  at1(m, n, n - 1) = y2.scaled(Coeff(2));
  at1(m, n, n) = -w;
  return m;
}

PolyMatrix build_B(const SliceContext& ctx) {
  PolyMatrix a = build_A(ctx);
  const int n = 2 * ctx.r - 2;
  PolyMatrix m(ctx.ring, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = a.at(i, j);
  return m;
}

bool symplectic_member(const PolyMatrix& x, const PolyMatrix& omega) {
  return (omega * x + x.transposed() * omega).is_zero();
}

std::vector<Poly> power_traces(const PolyMatrix& m, int max_power) {
  std::vector<Poly> out;
  PolyMatrix p = m;
  out.push_back(p.trace());
  for (int j = 2; j <= max_power; ++j) {
    p = p * m;
    out.push_back(p.trace());
  }
  return out;
}

TraceSolve solve_traces(const SliceContext& ctx,
                        const std::vector<Poly>& even_traces, bool flavored) {
  const int r = ctx.r;
  if (static_cast<int>(even_traces.size()) < r - 1)
    throw DomainError("need tr A^{2k} for k = 1..r-1");

  TraceSolve out;
  out.flavored = flavored;
  std::map<int, Poly> solved;

  auto target = [&](int k) {
    Poly t(ctx.ring);
    if (!flavored) return t;
    for (int i = 1; i <= r; ++i)
      t += Poly::variable(ctx.ring, ctx.z_index(i)).pow(2 * k);
    return t.scaled(Coeff(2));
  };

  for (int k = 1; k <= r - 1; ++k) {
    Poly eq = subst_poly(even_traces[static_cast<size_t>(k - 1)], solved) - target(k);
    for (int j = k + 1; j <= r - 1; ++j)
      if (eq.max_exp(ctx.b_index(j)) != 0)
        throw Error("trace equation for b" + std::to_string(k) +
                    " involves a later unknown: " + eq.to_string());
    const int bk = ctx.b_index(k);
    if (eq.max_exp(bk) != 1)
      throw Error("trace equation is not linear in b" + std::to_string(k) +
                  ": " + eq.to_string());
    Poly lin = eq.derivative(bk);
    if (!lin.is_constant() || lin.is_zero())
      throw Error("linear coefficient of b" + std::to_string(k) +
                  " is not a nonzero constant: " + lin.to_string());
    Poly cst = subst_poly(eq, {{bk, Poly(ctx.ring)}});
    Poly value = cst.scaled(coeff_div(Coeff(-1), lin.constant_value(),
                                      ctx.ring->extension()));
    solved.emplace(bk, value);
    out.b.push_back(value);

    if (!flavored) {
      auto q = try_divide(value, ctx.D.pow(k));
      if (!q || !q->is_constant() || q->is_zero())
        throw Error("solved b" + std::to_string(k) +
                    " is not a constant multiple of D^" + std::to_string(k) +
                    ": " + value.to_string());
      out.alpha.push_back(q->constant_value());
    }
  }

  for (int k = 1; k <= r - 1; ++k)
    if (subst_poly(even_traces[static_cast<size_t>(k - 1)], solved) != target(k))
      throw Error("substituted trace condition failed for k = " + std::to_string(k));
  return out;
}

Poly substitute_b(const SliceContext& ctx, const Poly& p,
                  const std::vector<Poly>& b) {
  std::map<int, Poly> m;
  for (size_t k = 0; k < b.size(); ++k)
    m.emplace(ctx.b_index(static_cast<int>(k) + 1), b[k]);
  return subst_poly(p, m);
}

Poly sigma_sum_detB(const SliceContext& ctx) {
  const int r = ctx.r;
  std::vector<Poly> zs;
  for (int i = 1; i <= r; ++i)
    zs.push_back(Poly::variable(ctx.ring, ctx.z_index(i)));
  std::vector<Poly> sigma = elementary_symmetric(ctx.ring, zs);

  Poly sum(ctx.ring);
  for (int m = 0; m <= r; ++m)
    for (int n = 0; n <= r; ++n) {
      if ((m + n) % 2 != 0 || m + n >= 2 * r) continue;
      Poly term = sigma[static_cast<size_t>(m)] * sigma[static_cast<size_t>(n)] *
                  ctx.D.pow(r - 1 - (m + n) / 2);
      if (m % 2 == 1 && n % 2 == 1) term = -term;
      sum += term;
    }
  return sum;
}

Poly flavored_relation(const SliceContext& ctx, const Poly& detA_solved) {
  Poly prod = Poly::constant(ctx.ring, Coeff(1));
  for (int i = 1; i <= ctx.r; ++i)
    prod *= Poly::variable(ctx.ring, ctx.z_index(i));
  Poly sq = prod * prod;
  if (ctx.r % 2 == 1) sq = -sq;
  return detA_solved - sq;
}

const SliceData& slice_data(int r) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<SliceData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(r);
  if (it != cache.end()) return *it->second;

  auto d = std::make_unique<SliceData>();
  d->ctx = make_slice_context(r);
  d->e = build_e(d->ctx);
  d->f = build_f(d->ctx);
  d->h = build_h(d->ctx);
  d->omega = build_omega(d->ctx);
  d->A = build_A(d->ctx);
  d->B = build_B(d->ctx);
  d->traces = power_traces(d->A, 2 * r);
  d->detA = det_fraction_free(d->A);
  d->detB = det_fraction_free(d->B);

  std::vector<Poly> evens;
  for (int k = 1; k <= r - 1; ++k)
    evens.push_back(d->traces[static_cast<size_t>(2 * k - 1)]);
  d->plain = solve_traces(d->ctx, evens, false);
  d->flavor = solve_traces(d->ctx, evens, true);
  d->detA_plain = substitute_b(d->ctx, d->detA, d->plain.b);
  d->detB_plain = substitute_b(d->ctx, d->detB, d->plain.b);
  d->detA_flavor = substitute_b(d->ctx, d->detA, d->flavor.b);
  d->detB_flavor = substitute_b(d->ctx, d->detB, d->flavor.b);

  auto [pos, inserted] = cache.emplace(r, std::move(d));
  (void)inserted;
  return *pos->second;
}

}  // namespace mlq
