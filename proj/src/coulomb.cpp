#include "mlq/coulomb.hpp"

#include <array>
#include <utility>
#include <vector>

#include "mlq/symfun.hpp"

namespace mlq {

namespace {

Coeff sign_pow(int r) { return Coeff(r % 2 == 0 ? 1 : -1); }  // (-1)^r

std::vector<Ring::Var> chart_vars(int r, bool flavored) {
  std::vector<Ring::Var> vars = {{"u1", VarKind::Laurent},
                                 {"u2", VarKind::Laurent},
                                 {"v1", VarKind::Poly},
                                 {"v2", VarKind::Poly}};
  if (flavored)
    for (int i = 1; i <= r; ++i)
      vars.push_back({"z" + std::to_string(i), VarKind::Poly});
  return vars;
}

}  // namespace

Poly EtaleChart::z(int i) const {
  if (!flavored) throw DomainError("plain chart has no deformation parameters");
  if (i < 1 || i > r) throw DomainError("z index out of range");
  return Poly::variable(ring, 4 + (i - 1));
}

EtaleChart make_chart(int r, bool flavored) {
  if (r < 1) throw DomainError("chart needs r >= 1");
  if (flavored && r < 2) throw DomainError("deformed chart needs r >= 2");
  EtaleChart c;
  c.r = r;
  c.flavored = flavored;
  c.ring = Ring::make(chart_vars(r, flavored));
  c.u1 = Poly::variable(c.ring, "u1");
  c.u2 = Poly::variable(c.ring, "u2");
  c.v1 = Poly::variable(c.ring, "v1");
  c.v2 = Poly::variable(c.ring, "v2");
  c.s = c.u1 * c.v1 - c.u2 * c.v2;
  c.pivot = std::make_shared<const Poly>(c.s);
  return c;
}

const Localized& GeneratorSet::by_name(std::string_view name) const {
  if (name == "x1") return x1;
  if (name == "y1") return y1;
  if (name == "x2") return x2;
  if (name == "y2") return y2;
  if (name == "w") return w;
  throw DomainError("unknown generator '" + std::string(name) + "'");
}

GeneratorSet build_generators(const EtaleChart& c, Mutation mut) {
  const Coeff eps = sign_pow(c.r);
  const Coeff ex2 = mut == Mutation::FlipX2 ? coeff_neg(eps) : eps;
  const Coeff ey2 = mut == Mutation::FlipY2 ? coeff_neg(eps) : eps;
  const Coeff ex1 = mut == Mutation::FlipX1Inner ? coeff_neg(eps) : eps;
  const Coeff ey1 = mut == Mutation::FlipY1Inner ? coeff_neg(eps) : eps;

  GeneratorSet g;
  g.x2 = Localized((c.u1 * c.u2).scaled(ex2));
  g.y2 = Localized((c.v1 * c.v2).scaled(ey2));
  g.w = Localized(c.u1 * c.v1 + c.u2 * c.v2);
  if (!c.flavored) {
    Poly sp = c.s.pow(c.r - 1);
    g.x1 = Localized(sp * (c.u1 - c.u2.scaled(ex1)));
    g.y1 = Localized(sp * (c.v1 - c.v2.scaled(ey1)));
  } else {
    // x1 = (u1 prod(s - z_i) - (-1)^r u2 prod(s + z_i)) / s and the v-mirror
    // with the two products swapped.
    Poly minus = Poly::constant(c.ring, 1);
    Poly plus = minus;
    for (int i = 1; i <= c.r; ++i) {
      minus *= c.s - c.z(i);
      plus *= c.s + c.z(i);
    }
    g.x1 = Localized(c.u1 * minus - (c.u2 * plus).scaled(ex1), 1, c.pivot);
    g.y1 = Localized(c.v1 * plus - (c.v2 * minus).scaled(ey1), 1, c.pivot);
  }
  return g;
}

Localized poisson_bracket(const EtaleChart& c, const Localized& f,
                          const Localized& g) {
  if (!f.num().ring()->same_as(*c.ring) || !g.num().ring()->same_as(*c.ring))
    throw RingMismatch("bracket arguments do not live on the chart");
  Localized out{Poly(c.ring)};
  for (auto [u, v] : {std::pair{"u1", "v1"}, std::pair{"u2", "v2"}})
    out += f.derivative(u) * g.derivative(v) - f.derivative(v) * g.derivative(u);
  return out;
}

RingPtr generator_ring(int r, bool flavored, const Ext& ext) {
  std::vector<std::string> names = {"x1", "y1", "x2", "y2", "w"};
  if (flavored)
    for (int i = 1; i <= r; ++i) names.push_back("z" + std::to_string(i));
  return make_ring(names, ext);
}

namespace {

struct GeneratorSymbols {
  Poly x1, y1, x2, y2, w, D, S;
};

GeneratorSymbols generator_symbols(const RingPtr& ring) {
  GeneratorSymbols s;
  s.x1 = Poly::variable(ring, "x1");
  s.y1 = Poly::variable(ring, "y1");
  s.x2 = Poly::variable(ring, "x2");
  s.y2 = Poly::variable(ring, "y2");
  s.w = Poly::variable(ring, "w");
  s.D = s.w * s.w - (s.x2 * s.y2).scaled(Coeff(4));
  s.S = s.x1 * s.x1 * s.y2 + s.x2 * s.y1 * s.y1 + s.w * s.x1 * s.y1;
  return s;
}

}  // namespace

Poly branch_relation(const RingPtr& ring, int r, Mutation mut) {
  if (r < 1) throw DomainError("relation needs r >= 1");
  const int e = r + (mut == Mutation::RelationExponent ? 1 : 0);
  GeneratorSymbols g = generator_symbols(ring);
  return g.D.pow(e) - g.S;
}

Poly deformed_relation(const RingPtr& ring, int r) {
  if (r < 2) throw DomainError("deformed relation needs r >= 2");
  GeneratorSymbols g = generator_symbols(ring);
  std::vector<Poly> zs;
  for (int i = 1; i <= r; ++i)
    zs.push_back(Poly::variable(ring, "z" + std::to_string(i)));
  std::vector<Poly> sigma = elementary_symmetric(ring, zs);
  Poly sum{ring};
  for (int m = 0; m <= r; ++m)
    for (int n = 0; n <= r; ++n) {
      if ((m + n) % 2 != 0) continue;
      Poly term = sigma[static_cast<size_t>(m)] * sigma[static_cast<size_t>(n)] *
                  g.D.pow(r - (m + n) / 2);
      if (m % 2 == 1 && n % 2 == 1) term = -term;  // (-1)^{mn}
      sum += term;
    }
  return g.S - sum;
}

Localized eval_on_chart(const Poly& p, const EtaleChart& chart,
                        const GeneratorSet& gen) {
  const std::map<std::string, Localized> assign = {{"x1", gen.x1},
                                                   {"y1", gen.y1},
                                                   {"x2", gen.x2},
                                                   {"y2", gen.y2},
                                                   {"w", gen.w}};
  return substitute(p, chart.ring, assign);
}

namespace {

// The (u, w)-presentation: u1, u2 invertible, w1, w2 polynomial.  E/F are the
// raw generating functions; the distinguished five are recovered as
// x1 = E1[1], x2 = (-1)^r E2[1], y1 = F1[1], y2 = (-1)^r F2[1], w = w1 + w2.
struct UwChart {
  RingPtr ring;
  Poly u1, u2, w1, w2;
  Poly u1i, u2i;  // the inverses
  Poly E1_1, E1_w, E2_1, F1_1, F1_w, F2_1;
};

UwChart make_uw_chart(int r, bool flavored) {
  std::vector<Ring::Var> vars = {{"u1", VarKind::Laurent},
                                 {"u2", VarKind::Laurent},
                                 {"w1", VarKind::Poly},
                                 {"w2", VarKind::Poly}};
  if (flavored)
    for (int i = 1; i <= r; ++i)
      vars.push_back({"z" + std::to_string(i), VarKind::Poly});
  UwChart c;
  c.ring = Ring::make(vars);
  c.u1 = Poly::variable(c.ring, "u1");
  c.u2 = Poly::variable(c.ring, "u2");
  c.w1 = Poly::variable(c.ring, "w1");
  c.w2 = Poly::variable(c.ring, "w2");
  auto inv = [&](int var) {
    Mono m(static_cast<size_t>(c.ring->nvars()), 0);
    m[static_cast<size_t>(var)] = -1;
    return Poly::term(c.ring, Coeff(1), std::move(m));
  };
  c.u1i = inv(0);
  c.u2i = inv(1);

  const Coeff eps = sign_pow(r);
  const Poly dwp = (c.w1 - c.w2).pow(r - 1);
  c.E1_1 = dwp * (c.u1 - c.u2.scaled(eps));
  c.E1_w = dwp * (c.w1 * c.u1 - (c.w2 * c.u2).scaled(eps));
  c.E2_1 = c.u1 * c.u2;
  c.F1_1 = dwp * (c.w1 * c.u1i - (c.w2 * c.u2i).scaled(eps));
  c.F1_w = dwp * (c.w1 * c.w1 * c.u1i - (c.w2 * c.w2 * c.u2i).scaled(eps));
  c.F2_1 = c.w1 * c.w2 * c.u1i * c.u2i;
  return c;
}

void append_witness(std::string* witness, const std::string& item) {
  if (!witness->empty()) *witness += "; ";
  *witness += item;
}

}  // namespace

std::string check_generators(int r, bool flavored) {
  EtaleChart chart = make_chart(r, flavored);
  GeneratorSet gen = build_generators(chart);
  UwChart uw = make_uw_chart(r, flavored);
  const Coeff eps = sign_pow(r);

  // Push a (u, w)-value onto the chart via w_i -> u_i v_i.
  const std::map<std::string, Localized> down = {
      {"w1", Localized(chart.u1 * chart.v1)},
      {"w2", Localized(chart.u2 * chart.v2)}};
  auto push = [&](const Poly& p) { return substitute(p, chart.ring, down); };

  std::string witness;
  auto expect = [&](const char* label, const Localized& got, const Localized& want) {
    if (!(got == want))
      append_witness(&witness, std::string(label) + ": " + got.to_string() +
                                   " vs " + want.to_string());
  };

  // The localization pivots correspond: w1 - w2 -> s.
  Localized dw = push(uw.w1 - uw.w2);
  expect("pivot", dw, Localized(chart.s));

  if (!flavored) {
    expect("x1", push(uw.E1_1), gen.x1);
    expect("x2", push(uw.E2_1).scaled(eps), gen.x2);
    expect("y1", push(uw.F1_1), gen.y1);
    expect("y2", push(uw.F2_1).scaled(eps), gen.y2);
    expect("w", push(uw.w1 + uw.w2), gen.w);
    // Regularity: the u-inverses cancel, so everything is pivot-free.
    for (const char* name : {"x1", "y1", "x2", "y2", "w"})
      if (gen.by_name(name).power() != 0 || !gen.by_name(name).as_poly())
        append_witness(&witness, std::string(name) + " not regular");
    return witness;
  }

  // Deformed pair: numerators over w1 - w2 map onto the chart numerators
  // over s.
  Poly pw = uw.w1 - uw.w2;
  Poly minus = Poly::constant(uw.ring, 1);
  Poly plus = minus;
  for (int i = 1; i <= r; ++i) {
    Poly zi = Poly::variable(uw.ring, "z" + std::to_string(i));
    minus *= pw - zi;
    plus *= pw + zi;
  }
  Poly x1_num = uw.u1 * minus - (uw.u2 * plus).scaled(eps);
  Poly y1_num = uw.u1i * uw.w1 * plus - (uw.u2i * uw.w2 * minus).scaled(eps);

  Localized x1_down = push(x1_num);
  Localized y1_down = push(y1_num);
  if (x1_down.power() != 0 || y1_down.power() != 0)
    return "pushed numerator acquired a pivot power";
  expect("x1", Localized(x1_down.num(), 1, chart.pivot), gen.x1);
  expect("y1", Localized(y1_down.num(), 1, chart.pivot), gen.y1);
  expect("x2", push(uw.E2_1).scaled(eps), gen.x2);
  expect("y2", push(uw.F2_1).scaled(eps), gen.y2);
  expect("w", push(uw.w1 + uw.w2), gen.w);
  return witness;
}

std::string check_redundancy(int r, Mutation mut) {
  UwChart c = make_uw_chart(r, false);
  Coeff recomb = sign_pow(r);
  if (mut == Mutation::RedundancySign) recomb = coeff_neg(recomb);
  const Poly sum = c.w1 + c.w2;

  std::string witness;
  Poly d1 = c.w1 * c.w2 - c.E2_1 * c.F2_1;
  if (!d1.is_zero()) append_witness(&witness, "w1 w2 - E2 F2 = " + d1.to_string());
  Poly d2 = c.E1_w - (sum * c.E1_1 + (c.E2_1 * c.F1_1).scaled(recomb));
  if (!d2.is_zero()) append_witness(&witness, "E1[w] identity residual " + d2.to_string());
  Poly d3 = c.F1_w - (sum * c.F1_1 + (c.F2_1 * c.E1_1).scaled(recomb));
  if (!d3.is_zero()) append_witness(&witness, "F1[w] identity residual " + d3.to_string());
  return witness;
}

std::string check_relation(int r, Mutation mut) {
  EtaleChart chart = make_chart(r, false);
  GeneratorSet gen = build_generators(chart, mut);
  Poly rel = branch_relation(generator_ring(r, false), r, mut);
  Localized res = eval_on_chart(rel, chart, gen);
  if (res.is_zero()) return {};
  return "relation residual: " + res.to_string();
}

std::string check_deformed_relation(int r) {
  EtaleChart chart = make_chart(r, true);
  GeneratorSet gen = build_generators(chart);
  Poly rel = deformed_relation(generator_ring(r, true), r);
  Localized res = eval_on_chart(rel, chart, gen);
  if (res.is_zero()) return {};
  return "deformed relation residual: " + res.to_string();
}

std::string check_bracket_table(int r,
                                std::map<std::string, std::string>* derived) {
  EtaleChart chart = make_chart(r, false);
  GeneratorSet g = build_generators(chart);
  const Localized zero{Poly(chart.ring)};
  struct Row {
    const char* f;
    const char* g;
    Localized want;
  };
  const std::array<Row, 9> table = {{{"x2", "y2", g.w},
                                     {"w", "x2", g.x2.scaled(Coeff(-2))},
                                     {"w", "y2", g.y2.scaled(Coeff(2))},
                                     {"y2", "x1", g.y1},
                                     {"y2", "y1", zero},
                                     {"x2", "x1", zero},
                                     {"x2", "y1", -g.x1},
                                     {"w", "x1", -g.x1},
                                     {"w", "y1", g.y1}}};
  std::string witness;
  for (const Row& row : table) {
    Localized got = poisson_bracket(chart, g.by_name(row.f), g.by_name(row.g));
    if (!(got == row.want))
      append_witness(&witness, std::string("{") + row.f + ", " + row.g +
                                   "} = " + got.to_string());
  }
  if (derived)
    (*derived)["bracket.x1y1"] =
        poisson_bracket(chart, g.x1, g.y1).to_string();
  return witness;
}

std::string check_jacobi(int r) {
  EtaleChart chart = make_chart(r, false);
  GeneratorSet g = build_generators(chart);
  const std::array<const char*, 5> names = {"x1", "y1", "x2", "y2", "w"};
  std::string witness;
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i + 1; j < names.size(); ++j)
      for (size_t k = j + 1; k < names.size(); ++k) {
        const Localized& a = g.by_name(names[i]);
        const Localized& b = g.by_name(names[j]);
        const Localized& c = g.by_name(names[k]);
        Localized total =
            poisson_bracket(chart, a, poisson_bracket(chart, b, c)) +
            poisson_bracket(chart, b, poisson_bracket(chart, c, a)) +
            poisson_bracket(chart, c, poisson_bracket(chart, a, b));
        if (!total.is_zero())
          append_witness(&witness, std::string("jacobi(") + names[i] + ", " +
                                       names[j] + ", " + names[k] +
                                       ") = " + total.to_string());
      }
  return witness;
}

std::string check_grading(int r) {
  EtaleChart chart = make_chart(r, false);
  GeneratorSet g = build_generators(chart);
  std::string witness;

  // ad(-w) acts with weights 2, -2, 1, -1 on x2, y2, x1, y1.
  struct WeightRow {
    const char* name;
    Localized want;
  };
  const std::array<WeightRow, 4> weights = {{{"x2", g.x2.scaled(Coeff(2))},
                                             {"y2", g.y2.scaled(Coeff(-2))},
                                             {"x1", g.x1},
                                             {"y1", -g.y1}}};
  for (const WeightRow& row : weights) {
    Localized got = poisson_bracket(chart, -g.w, g.by_name(row.name));
    if (!(got == row.want))
      append_witness(&witness, std::string("{-w, ") + row.name +
                                   "} = " + got.to_string());
  }

  // Chart homogeneity under deg u_i = deg v_i = 1.
  const std::vector<long> chart_wt(static_cast<size_t>(chart.ring->nvars()), 1);
  struct DegRow {
    const char* name;
    long degree;
  };
  const std::array<DegRow, 5> degrees = {{{"x1", 2L * r - 1},
                                          {"y1", 2L * r - 1},
                                          {"x2", 2},
                                          {"y2", 2},
                                          {"w", 2}}};
  for (const DegRow& row : degrees) {
    long got = 0;
    if (!g.by_name(row.name).num().is_homogeneous(chart_wt, &got) ||
        got != row.degree)
      append_witness(&witness, std::string(row.name) + " not homogeneous of chart degree " +
                                   std::to_string(row.degree));
  }

  // The relation is homogeneous of degree 4r under the generator grading.
  RingPtr aring = generator_ring(r, false);
  const std::vector<long> gen_wt = {2L * r - 1, 2L * r - 1, 2, 2, 2};
  long rel_deg = 0;
  if (!branch_relation(aring, r).is_homogeneous(gen_wt, &rel_deg) ||
      rel_deg != 4L * r)
    append_witness(&witness, "relation not homogeneous of degree " +
                                 std::to_string(4L * r));
  return witness;
}

std::string check_trace_form(int r, Mutation mut,
                             std::map<std::string, std::string>* derived) {
  if (r < 1) throw DomainError("trace form needs r >= 1");
  RingPtr ring = generator_ring(r, false, Ext(Rat(2)));
  GeneratorSymbols s = generator_symbols(ring);
  const Coeff half{Rat(1, 2)};

  PolyMatrix N(ring, 2, 2);
  N.at(0, 0) = -s.x2;
  N.at(0, 1) = s.w.scaled(half);
  N.at(1, 0) = s.w.scaled(half);
  N.at(1, 1) = -s.y2;
  PolyMatrix Om(ring, 2, 2);
  Om.at(0, 1) = Poly::constant(ring, Coeff(-1));
  Om.at(1, 0) = Poly::constant(ring, Coeff(1));

  PolyMatrix M = N * Om;
  Poly anchor = M.pow(2).trace() - (s.w * s.w).scaled(half) +
                (s.x2 * s.y2).scaled(Coeff(2));
  if (!anchor.is_zero())
    return "square trace anchor residual: " + anchor.to_string();

  Poly trace = M.pow(2 * r).trace();
  PolyMatrix A(ring, 2, 1);
  A.at(0, 0) = s.x1;
  A.at(1, 0) = s.y1;
  Poly quad = (A.transposed() * (Om * (N * Om)) * A).at(0, 0);

  // sqrt(2)/2^r = (1/2^r) sqrt(2); the literal-control value is
  // 4^r/sqrt(2) = (4^r/2) sqrt(2).
  const Coeff lam = mut == Mutation::LiteralRescale
                        ? Coeff(Rat(0), Rat(1L << (2 * r), 2))
                        : Coeff(Rat(0), Rat(1, 1L << r));
  const std::map<int, Poly> rescale = {{ring->index("x1"), s.x1.scaled(lam)},
                                       {ring->index("y1"), s.y1.scaled(lam)}};
  Poly diff = trace - subst_poly(quad, rescale);

  Poly rel = branch_relation(ring, r);
  Poly rem;
  auto q = try_divide(diff, rel, &rem);
  if (!q)
    return "difference not a multiple of the relation; remainder " +
           rem.to_string();
  if (!q->is_constant() || q->is_zero())
    return "quotient not a nonzero constant: " + q->to_string();
  if (derived)
    (*derived)["kappa"] = coeff_to_string(q->constant_value(), ring->extension());
  return {};
}

namespace {

// Minimal 2x2 matrix of localized values, just enough for the invariance
// computation (the entries involve the symbolic inverse of a).
struct LMat2 {
  Localized e[2][2];
};

LMat2 lmul(const LMat2& x, const LMat2& y) {
  LMat2 o;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      o.e[i][j] = x.e[i][0] * y.e[0][j] + x.e[i][1] * y.e[1][j];
  return o;
}

LMat2 ltrans(const LMat2& x) {
  LMat2 o = x;
  std::swap(o.e[0][1], o.e[1][0]);
  return o;
}

}  // namespace

std::string check_sl2_invariance(int r) {
  RingPtr ring = make_ring({"x1", "y1", "x2", "y2", "w", "a", "b", "c"});
  GeneratorSymbols s = generator_symbols(ring);
  const Poly a = Poly::variable(ring, "a");
  const Poly b = Poly::variable(ring, "b");
  const Poly c = Poly::variable(ring, "c");
  auto pivot = std::make_shared<const Poly>(a);
  const Coeff half{Rat(1, 2)};
  const Localized lzero{Poly(ring)};
  const Localized lone{Poly::constant(ring, 1)};

  LMat2 N;
  N.e[0][0] = Localized(-s.x2);
  N.e[0][1] = Localized(s.w.scaled(half));
  N.e[1][0] = Localized(s.w.scaled(half));
  N.e[1][1] = Localized(-s.y2);
  LMat2 Om;
  Om.e[0][0] = lzero;
  Om.e[0][1] = -lone;
  Om.e[1][0] = lone;
  Om.e[1][1] = lzero;
  const Localized A0{s.x1};
  const Localized A1{s.y1};

  // tr((N' Om)^{2r}) and A'^T Om N' Om A' for N' = S N S^T, A' = S A.
  auto both_sides = [&](const LMat2& S2) -> std::pair<Localized, Localized> {
    LMat2 Np = lmul(lmul(S2, N), ltrans(S2));
    Localized B0 = S2.e[0][0] * A0 + S2.e[0][1] * A1;
    Localized B1 = S2.e[1][0] * A0 + S2.e[1][1] * A1;
    LMat2 P = lmul(Np, Om);
    LMat2 P2 = lmul(P, P);
    LMat2 T = P2;
    for (int i = 2; i <= r; ++i) T = lmul(T, P2);
    Localized trace = T.e[0][0] + T.e[1][1];
    LMat2 Q = lmul(Om, lmul(Np, Om));
    Localized quad = B0 * (Q.e[0][0] * B0 + Q.e[0][1] * B1) +
                     B1 * (Q.e[1][0] * B0 + Q.e[1][1] * B1);
    return {trace, quad};
  };

  LMat2 identity;
  identity.e[0][0] = lone;
  identity.e[0][1] = lzero;
  identity.e[1][0] = lzero;
  identity.e[1][1] = lone;
  LMat2 rotation;
  rotation.e[0][0] = lzero;
  rotation.e[0][1] = -lone;
  rotation.e[1][0] = lone;
  rotation.e[1][1] = lzero;
  LMat2 generic;
  generic.e[0][0] = Localized(a);
  generic.e[0][1] = Localized(b);
  generic.e[1][0] = Localized(c);
  generic.e[1][1] = Localized(Poly::constant(ring, 1) + b * c, 1, pivot);

  const auto [trace0, quad0] = both_sides(identity);

  std::string witness;
  struct Case {
    const char* name;
    const LMat2* S2;
  };
  const std::array<Case, 3> cases = {
      {{"identity", &identity}, {"rotation", &rotation}, {"generic", &generic}}};
  for (const Case& cs : cases) {
    const auto [trace, quad] = both_sides(*cs.S2);
    if (!(trace == trace0))
      append_witness(&witness, std::string(cs.name) + " trace changed: " +
                                   trace.to_string());
    if (!(quad == quad0))
      append_witness(&witness, std::string(cs.name) + " quadratic side changed: " +
                                   quad.to_string());
  }
  return witness;
}

std::string check_sigma_parity(int r, int k) {
  if (k < 0 || k > r) throw DomainError("sigma parity needs 0 <= k <= r");
  std::vector<std::string> names;
  for (int i = 1; i <= r; ++i) names.push_back("z" + std::to_string(i));
  RingPtr ring = make_ring(names);
  std::vector<Poly> zs;
  for (const std::string& n : names) zs.push_back(Poly::variable(ring, n));
  std::vector<Poly> sigma = elementary_symmetric(ring, zs);

  Poly sum{ring};
  for (int m = 0; m <= r; ++m) {
    const int n = 2 * k - m;
    if (n < 0 || n > r) continue;
    Poly term = sigma[static_cast<size_t>(m)] * sigma[static_cast<size_t>(n)];
    if (m % 2 == 1 && n % 2 == 1) term = -term;
    sum += term;
  }
  for (const Term& t : sum.terms())
    for (int32_t e : t.m)
      if (e % 2 != 0)
        return "odd exponent in " + Poly::term(ring, t.c, t.m).to_string();
  return {};
}

std::string check_specialization(int r) {
  EtaleChart fc = make_chart(r, true);
  GeneratorSet fg = build_generators(fc);
  EtaleChart pc = make_chart(r, false);
  GeneratorSet pg = build_generators(pc);

  std::map<int, Poly> z_zero;
  for (int i = 1; i <= r; ++i) z_zero[4 + (i - 1)] = Poly(fc.ring);
  auto specialize = [&](const Localized& v) {
    return Localized(subst_poly(v.num(), z_zero), v.power(), v.pivot());
  };
  auto lift = [&](const Localized& v) {
    return Localized(transport(v.num(), fc.ring), 0, fc.pivot);
  };

  std::string witness;
  for (const char* name : {"x1", "y1", "x2", "y2", "w"})
    if (!(specialize(fg.by_name(name)) == lift(pg.by_name(name))))
      append_witness(&witness, std::string(name) + " does not degenerate");

  RingPtr fring = generator_ring(r, true);
  RingPtr pring = generator_ring(r, false);
  std::map<int, Poly> za_zero;
  for (int i = 1; i <= r; ++i)
    za_zero[fring->index("z" + std::to_string(i))] = Poly(fring);
  Poly got = subst_poly(deformed_relation(fring, r), za_zero);
  Poly want = -transport(branch_relation(pring, r), fring);
  if (got != want)
    append_witness(&witness, "relation does not degenerate: " +
                                 (got - want).to_string());
  return witness;
}

}  // namespace mlq
