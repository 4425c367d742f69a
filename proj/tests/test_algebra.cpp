// Kernel tests: coefficients, sparse polynomials, localized values, matrices
// and symmetric functions, with independent oracles for the nontrivial
// algorithms (multiplication, division, determinants, Newton's identities).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <vector>

#include "mlq/localized.hpp"
#include "mlq/matrix.hpp"
#include "mlq/poly.hpp"
#include "mlq/symfun.hpp"

using namespace mlq;

namespace {

Coeff rand_coeff(std::mt19937& rng, bool radical, long spread = 5) {
  std::uniform_int_distribution<long> num(-spread, spread);
  std::uniform_int_distribution<long> den(1, 4);
  Rat a(num(rng), den(rng));
  a.canonicalize();
  if (!radical) return Coeff(a);
  Rat b(num(rng), den(rng));
  b.canonicalize();
  return Coeff(a, b);
}

Poly rand_poly(const RingPtr& ring, std::mt19937& rng, int nterms,
               bool radical = false) {
  std::uniform_int_distribution<int> pexp(0, 3);
  std::uniform_int_distribution<int> lexp(-2, 3);
  std::vector<Term> terms;
  for (int t = 0; t < nterms; ++t) {
    Mono m(static_cast<size_t>(ring->nvars()));
    for (int v = 0; v < ring->nvars(); ++v)
      m[static_cast<size_t>(v)] =
          ring->kind(v) == VarKind::Laurent ? lexp(rng) : pexp(rng);
    terms.push_back({std::move(m), rand_coeff(rng, radical)});
  }
  return Poly::from_terms(ring, std::move(terms));
}

// Schoolbook product: distribute q over the terms of p, building each partial
// product directly from exponent sums.  Independent of operator*'s merge.
Poly slow_mul(const Poly& p, const Poly& q) {
  Poly acc(p.ring());
  const Ext& d = p.ring()->extension();
  for (const Term& tp : p.terms()) {
    std::vector<Term> partial;
    for (const Term& tq : q.terms()) {
      Mono m = tp.m;
      for (size_t v = 0; v < m.size(); ++v) m[v] += tq.m[v];
      partial.push_back({std::move(m), coeff_mul(tp.c, tq.c, d)});
    }
    acc += Poly::from_terms(p.ring(), std::move(partial));
  }
  return acc;
}

}  // namespace

TEST_CASE("coefficient field axioms in Q(sqrt(5))") {
  Ext d{Rat(5)};
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    Coeff x = rand_coeff(rng, true), y = rand_coeff(rng, true),
          z = rand_coeff(rng, true);
    CHECK(coeff_add(x, y) == coeff_add(y, x));
    CHECK(coeff_mul(x, y, d) == coeff_mul(y, x, d));
    CHECK(coeff_mul(coeff_mul(x, y, d), z, d) ==
          coeff_mul(x, coeff_mul(y, z, d), d));
    CHECK(coeff_mul(x, coeff_add(y, z), d) ==
          coeff_add(coeff_mul(x, y, d), coeff_mul(x, z, d)));
    CHECK(coeff_sub(x, x).is_zero());
    if (!x.is_zero()) {
      CHECK(coeff_mul(x, coeff_inv(x, d), d) == Coeff(1));
      CHECK(coeff_div(y, x, d) == coeff_mul(y, coeff_inv(x, d), d));
    }
  }
}

TEST_CASE("coefficient edge cases") {
  Ext d4{Rat(4)};
  // 2 + 1*sqrt(4) has norm 4 - 4 = 0: not invertible even though nonzero.
  CHECK_THROWS_AS(coeff_inv(Coeff(Rat(2), Rat(1)), d4), DomainError);
  CHECK(coeff_mul(Coeff(Rat(2), Rat(1)), Coeff(Rat(2), Rat(-1)), d4) ==
        Coeff(0));
  // Radical arithmetic without an extension is rejected.
  CHECK_THROWS_AS(coeff_mul(Coeff(Rat(0), Rat(1)), Coeff(Rat(0), Rat(1)), Ext{}),
                  DomainError);
  CHECK_THROWS_AS(coeff_inv(Coeff(0), Ext{}), DomainError);
  // Plain rational products never consult the extension.
  CHECK(coeff_mul(Coeff(Rat(1, 2)), Coeff(Rat(2, 3)), Ext{}) ==
        Coeff(Rat(1, 3)));
  CHECK(coeff_to_string(Coeff(Rat(-1, 2)), Ext{}) == "-1/2");
  CHECK(coeff_to_string(Coeff(Rat(1), Rat(-2, 3)), Ext{Rat(7)}) ==
        "(1 - 2/3*sqrt(7))");
}

TEST_CASE("ring construction and lookup") {
  RingPtr ring = Ring::make({{"x", VarKind::Poly}, {"u", VarKind::Laurent}});
  CHECK(ring->nvars() == 2);
  CHECK(ring->kind(1) == VarKind::Laurent);
  CHECK(ring->find("u") == 1);
  CHECK(ring->find("t") == std::nullopt);
  CHECK_THROWS_AS(ring->index("t"), UnknownVariable);
  CHECK_THROWS_AS(Ring::make({{"x", VarKind::Poly}, {"x", VarKind::Laurent}}),
                  DomainError);
  CHECK(make_ring({"a", "b"})->kind(0) == VarKind::Poly);
}

TEST_CASE("polynomial ring axioms (random, fixed seed)") {
  RingPtr ring = Ring::make(
      {{"x", VarKind::Poly}, {"y", VarKind::Poly}, {"u", VarKind::Laurent}},
      Ext{Rat(2)});
  std::mt19937 rng(987654);
  for (int trial = 0; trial < 40; ++trial) {
    Poly p = rand_poly(ring, rng, 4, true);
    Poly q = rand_poly(ring, rng, 4, true);
    Poly r = rand_poly(ring, rng, 3, true);
    CHECK(p + q == q + p);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p - p).is_zero());
    CHECK(p * q == slow_mul(p, q));
    CHECK(-(-p) == p);
  }
}

TEST_CASE("exponent validation and term normalization") {
  RingPtr ring = Ring::make({{"x", VarKind::Poly}, {"u", VarKind::Laurent}});
  CHECK_THROWS_AS(Poly::term(ring, Coeff(1), Mono{-1, 0}), DomainError);
  CHECK_NOTHROW(Poly::term(ring, Coeff(1), Mono{0, -3}));
  // Duplicate monomials merge; cancelling pairs vanish.
  Poly p = Poly::from_terms(
      ring, {{Mono{1, 0}, Coeff(2)}, {Mono{1, 0}, Coeff(-2)}, {Mono{0, 1}, Coeff(1)}});
  CHECK(p.nterms() == 1);
  CHECK(p == Poly::variable(ring, "u"));
  CHECK(Poly::constant(ring, Coeff(0)).is_zero());
  CHECK(Poly::variable(ring, "x").lead().m == Mono{1, 0});
}

TEST_CASE("squared discriminant against the schoolbook oracle") {
  RingPtr ring = make_ring({"x2", "y2", "w"});
  Poly x2 = Poly::variable(ring, "x2"), y2 = Poly::variable(ring, "y2"),
       w = Poly::variable(ring, "w");
  Poly disc = w * w - (x2 * y2).scaled(Coeff(4));
  CHECK(disc.pow(2) == slow_mul(disc, disc));
  // And against the binomial expansion written out by hand.
  Poly byhand = w.pow(4) - (w * w * x2 * y2).scaled(Coeff(8)) +
                (x2 * x2 * y2 * y2).scaled(Coeff(16));
  CHECK(disc.pow(2) == byhand);
  CHECK(disc.pow(0) == Poly::constant(ring, Coeff(1)));
}

TEST_CASE("print/parse round-trip") {
  RingPtr ring = Ring::make(
      {{"x", VarKind::Poly}, {"y", VarKind::Poly}, {"u", VarKind::Laurent}},
      Ext{Rat(3)});
  std::mt19937 rng(13579);
  for (int trial = 0; trial < 30; ++trial) {
    Poly p = rand_poly(ring, rng, 5, true);
    CHECK(parse_poly(ring, p.to_string()) == p);
  }
  CHECK(parse_poly(ring, "0").is_zero());
  CHECK(parse_poly(ring, " x * y - 2 ") ==
        Poly::variable(ring, "x") * Poly::variable(ring, "y") -
            Poly::constant(ring, Coeff(2)));
  CHECK(parse_poly(ring, "u^-2") == Poly::term(ring, Coeff(1), Mono{0, 0, -2}));
  CHECK(parse_poly(ring, "(1 + 1*sqrt(3))*x") ==
        Poly::variable(ring, "x").scaled(Coeff(Rat(1), Rat(1))));
  CHECK_THROWS_AS(parse_poly(ring, "x + t"), UnknownVariable);
  CHECK_THROWS_AS(parse_poly(ring, "x^-1"), DomainError);
  CHECK_THROWS_AS(parse_poly(ring, "x + "), DomainError);
  CHECK(Poly::variable(ring, "x").to_string() == "1*x");
}

TEST_CASE("derivatives") {
  RingPtr ring =
      Ring::make({{"x", VarKind::Poly}, {"u", VarKind::Laurent}});
  Poly x = Poly::variable(ring, "x"), u = Poly::variable(ring, "u");
  std::mt19937 rng(24680);
  for (int trial = 0; trial < 25; ++trial) {
    Poly p = rand_poly(ring, rng, 4);
    Poly q = rand_poly(ring, rng, 4);
    CHECK((p * q).derivative(0) ==
          p.derivative(0) * q + p * q.derivative(0));
    CHECK((p + q).derivative("u") == p.derivative("u") + q.derivative("u"));
  }
  // d/du u^-2 = -2 u^-3.
  CHECK(Poly::term(ring, Coeff(1), Mono{0, -2}).derivative("u") ==
        Poly::term(ring, Coeff(-2), Mono{0, -3}));
  CHECK(x.derivative("u").is_zero());
  CHECK(Poly::constant(ring, Coeff(7)).derivative(0).is_zero());
}

TEST_CASE("exact division") {
  RingPtr ring = Ring::make({{"x", VarKind::Poly}, {"y", VarKind::Poly},
                             {"u", VarKind::Laurent}});
  Poly x = Poly::variable(ring, "x"), y = Poly::variable(ring, "y"),
       u = Poly::variable(ring, "u");
  CHECK(try_divide((x + y) * (x - y), x + y) == x - y);
  Poly rem(ring);
  CHECK(!try_divide(x * x + y * y, x + y, &rem).has_value());
  CHECK(!rem.is_zero());
  // Laurent divisor: (u - u^-1) / u^-1 = u^2 - 1.
  Poly ui = Poly::term(ring, Coeff(1), Mono{0, 0, -1});
  CHECK(try_divide(u - ui, ui) == u * u - Poly::constant(ring, Coeff(1)));
  CHECK(exact_divide(x * y, y) == x);
  CHECK_THROWS_AS(exact_divide(x, y), DivisionError);
  CHECK_THROWS_AS(try_divide(x, Poly(ring)), DomainError);
  // Random (p*q)/q over 30 draws.
  std::mt19937 rng(1122);
  for (int trial = 0; trial < 30; ++trial) {
    Poly p = rand_poly(ring, rng, 3), q = rand_poly(ring, rng, 3);
    if (q.is_zero()) continue;
    CHECK(try_divide(p * q, q) == p);
  }
}

TEST_CASE("substitution, transport, homogeneity") {
  RingPtr ring = make_ring({"x", "y"});
  Poly x = Poly::variable(ring, "x"), y = Poly::variable(ring, "y");
  CHECK(subst_poly(x * x + y, {{0, y * y}}) == y * y * y * y + y);
  RingPtr big = make_ring({"x", "y", "z"});
  Poly moved = transport(x + y, big);
  CHECK(moved == Poly::variable(big, "x") + Poly::variable(big, "y"));
  CHECK_THROWS_AS(transport(Poly::variable(big, "z"), ring), UnknownVariable);
  long deg = 0;
  CHECK((x * x * y).is_homogeneous({1, 1}, &deg));
  CHECK(deg == 3);
  CHECK(!(x + y * y).is_homogeneous({1, 1}));
  CHECK((x + y * y).is_homogeneous({2, 1}, &deg));
  CHECK(deg == 2);
  CHECK(x.max_exp(0) == 1);
  CHECK(x.min_exp(0) == 1);
}

TEST_CASE("localized values") {
  RingPtr ring = make_ring({"x", "y"});
  Poly x = Poly::variable(ring, "x"), y = Poly::variable(ring, "y");
  auto pivot = std::make_shared<const Poly>(x * x - y);

  Localized a(x, 1, pivot);            // x / s
  Localized b(x * *pivot, 2, pivot);   // (x s) / s^2, same value
  CHECK(a == b);
  CHECK(a != Localized(y, 1, pivot));
  CHECK((a - b).is_zero());  // power alignment cancels the numerators exactly
  CHECK(a - b == Localized(Poly(ring)));
  CHECK(a.pow(2) == a * a);

  // Addition aligns powers: x/s + y = (x + y s)/s.
  CHECK(Localized(x, 1, pivot) + Localized(y) ==
        Localized(x + y * *pivot, 1, pivot));
  // Quotient rule: d/dy (x/s) = x/s^2 since ds/dy = -1.
  CHECK(a.derivative("y") == Localized(x, 2, pivot));
  // Derivative of a plain value stays plain.
  CHECK(Localized(x * y).derivative("x") == Localized(y));

  // Inverses: units are coefficient * invertible-monomial * pivot^k (and x
  // is not invertible here, even dressed with pivot factors).
  CHECK(Localized(*pivot, 0, pivot).try_invert().has_value());
  CHECK(!Localized(x + y, 1, pivot).try_invert().has_value());
  CHECK(!Localized(x * *pivot, 1, pivot).try_invert().has_value());
  Localized two_s(pivot->scaled(Coeff(2)) * *pivot, 1, pivot);  // value 2s
  auto inv = two_s.try_invert();
  REQUIRE(inv.has_value());
  CHECK(*inv * two_s == Localized(Poly::constant(ring, Coeff(1))));

  // as_poly: exact pivot division collapses the frame.
  auto collapsed = Localized(*pivot * y, 1, pivot).as_poly();
  REQUIRE(collapsed.has_value());
  CHECK(*collapsed == y);
  CHECK(!Localized(x, 1, pivot).as_poly().has_value());

  // Pivot bookkeeping.
  auto other = std::make_shared<const Poly>(x + y);
  CHECK_THROWS_AS(Localized(x, 1, pivot) + Localized(y, 1, other), PivotError);
  CHECK(merge_pivots(Localized(x), Localized(y)) == nullptr);
  CHECK(merge_pivots(a, Localized(y)) == pivot);
  CHECK(Localized(x, 1, pivot).to_string() == "(1*x) / (1*x^2 - 1*y)^1");
}

TEST_CASE("localized substitution across rings") {
  RingPtr src = Ring::make({{"q", VarKind::Laurent}, {"x", VarKind::Poly}});
  RingPtr dst = make_ring({"x", "y"});
  Poly X = Poly::variable(dst, "x"), Y = Poly::variable(dst, "y");
  auto pivot = std::make_shared<const Poly>(X * X - Y);

  // q -> pivot (invertible in the localized ring), x carried by name.
  std::map<std::string, Localized> assign{{"q", Localized(*pivot, 0, pivot)}};
  Poly p = Poly::term(src, Coeff(3), Mono{-2, 1});  // 3 q^-2 x
  Localized got = substitute(p, dst, assign);
  CHECK(got == Localized(X.scaled(Coeff(3)), 2, pivot));

  // Non-invertible value against a negative exponent.
  std::map<std::string, Localized> bad{{"q", Localized(X + Y)}};
  CHECK_THROWS_AS(substitute(p, dst, bad), DomainError);
  // Assigning a variable the source ring does not have.
  std::map<std::string, Localized> missing{{"t", Localized(X)}};
  CHECK_THROWS_AS(substitute(p, dst, missing), UnknownVariable);
  // Unassigned names must exist in the target.
  RingPtr tiny = make_ring({"y"});
  std::map<std::string, Localized> only_q{
      {"q", Localized(Poly::constant(tiny, Coeff(1)))}};
  CHECK_THROWS_AS(substitute(p, tiny, only_q), UnknownVariable);
}

TEST_CASE("matrix determinants agree and char_poly matches the companion") {
  RingPtr ring = make_ring({"x", "y", "lam"});
  std::mt19937 rng(555);
  for (int trial = 0; trial < 8; ++trial) {
    PolyMatrix m(ring, 4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m.at(i, j) = rand_poly(ring, rng, 2);
    CHECK(det_fraction_free(m) == det_cofactor(m));
  }
  // Companion matrix of lam^3 + 2 lam^2 - lam + 5 (over x as a spectator).
  PolyMatrix c(ring, 3, 3);
  c.at(0, 1) = Poly::constant(ring, Coeff(1));
  c.at(1, 2) = Poly::constant(ring, Coeff(1));
  c.at(2, 0) = Poly::constant(ring, Coeff(-5));
  c.at(2, 1) = Poly::constant(ring, Coeff(1));
  c.at(2, 2) = Poly::constant(ring, Coeff(-2));
  Poly lam = Poly::variable(ring, "lam");
  Poly expect = lam.pow(3) + lam.pow(2).scaled(Coeff(2)) - lam +
                Poly::constant(ring, Coeff(5));
  CHECK(char_poly(c, ring->index("lam")) == expect);

  // Trace/product identities.
  PolyMatrix a(ring, 3, 3), b(ring, 3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      a.at(i, j) = rand_poly(ring, rng, 2);
      b.at(i, j) = rand_poly(ring, rng, 2);
    }
  CHECK((a * b).trace() == (b * a).trace());
  CHECK((a * b).transposed() == b.transposed() * a.transposed());
  CHECK(a.pow(3) == a * a * a);
  CHECK(det_fraction_free(PolyMatrix::identity(ring, 5)) ==
        Poly::constant(ring, Coeff(1)));
  CHECK(commutator(a, a).is_zero());
}

TEST_CASE("symmetric functions and Newton's identities") {
  RingPtr ring = make_ring({"x", "y", "z"});
  Poly x = Poly::variable(ring, "x"), y = Poly::variable(ring, "y"),
       z = Poly::variable(ring, "z");
  std::vector<Poly> vals{x, y, z, x * y - z};
  auto e = elementary_symmetric(ring, vals);
  REQUIRE(e.size() == 5);
  CHECK(e[0] == Poly::constant(ring, Coeff(1)));
  CHECK(e[1] == x + y + z + x * y - z);
  auto p = power_sums(ring, vals, 4);
  CHECK(p[0] == e[1]);
  CHECK(p[1] == x * x + y * y + z * z + (x * y - z) * (x * y - z));
  CHECK(elementary_from_power_sums(ring, p) == e);
}
