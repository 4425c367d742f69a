// Generator and Poisson-structure tests: explicit r = 2 chart images,
// bracket anchors, the relation and redundancy identities, the trace form,
// and the negative controls that must be caught.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <string>

#include "mlq/coulomb.hpp"

using namespace mlq;

namespace {

Localized plain(const Poly& p) { return Localized(p); }

}  // namespace

TEST_CASE("chart construction") {
  CHECK_THROWS_AS(make_chart(0, false), DomainError);
  CHECK_THROWS_AS(make_chart(1, true), DomainError);
  EtaleChart chart = make_chart(2, true);
  CHECK(chart.ring->nvars() == 4 + 2);
  CHECK(chart.ring->kind(chart.ring->index("u1")) == VarKind::Laurent);
  CHECK(chart.ring->kind(chart.ring->index("v1")) == VarKind::Poly);
  CHECK(chart.z(1) == Poly::variable(chart.ring, "z1"));
  CHECK(chart.s == chart.u1 * chart.v1 - chart.u2 * chart.v2);
  CHECK(*chart.pivot == chart.s);
  EtaleChart flat = make_chart(3, false);
  CHECK(flat.ring->nvars() == 4);
  CHECK_THROWS_AS(flat.z(1), DomainError);
}

TEST_CASE("r = 2 generator images") {
  EtaleChart chart = make_chart(2, false);
  GeneratorSet gen = build_generators(chart);
  // Even r: the sign (-1)^r is +1.
  CHECK(gen.x2 == plain(chart.u1 * chart.u2));
  CHECK(gen.y2 == plain(chart.v1 * chart.v2));
  CHECK(gen.w == plain(chart.u1 * chart.v1 + chart.u2 * chart.v2));
  CHECK(gen.x1 == plain(chart.s * (chart.u1 - chart.u2)));
  CHECK(gen.y1 == plain(chart.s * (chart.v1 - chart.v2)));
  // Plain charts are honest Laurent polynomials.
  CHECK(gen.x1.power() == 0);
  CHECK(gen.by_name("w") == gen.w);
  CHECK_THROWS_AS(gen.by_name("q"), DomainError);

  // Odd r flips both outer signs.
  EtaleChart c1 = make_chart(1, false);
  GeneratorSet g1 = build_generators(c1);
  CHECK(g1.x2 == plain(-(c1.u1 * c1.u2)));
  CHECK(g1.x1 == plain(c1.u1 + c1.u2));  // s^0 (u1 + u2)
}

TEST_CASE("canonical bracket on the chart") {
  EtaleChart chart = make_chart(2, false);
  Localized u1 = plain(chart.u1), v1 = plain(chart.v1), u2 = plain(chart.u2),
            v2 = plain(chart.v2);
  Poly one = Poly::constant(chart.ring, Coeff(1));
  CHECK(poisson_bracket(chart, u1, v1) == plain(one));
  CHECK(poisson_bracket(chart, v1, u1) == plain(-one));
  CHECK(poisson_bracket(chart, u1, v2) == plain(Poly(chart.ring)));
  CHECK(poisson_bracket(chart, u1, u2).is_zero());
  // Leibniz on a product.
  Localized f = u1 * v1, g = u2 * v2 + v1;
  CHECK(poisson_bracket(chart, f * g, v1 * u2) ==
        f * poisson_bracket(chart, g, v1 * u2) +
            g * poisson_bracket(chart, f, v1 * u2));
}

TEST_CASE("bracket anchors at r = 2") {
  EtaleChart chart = make_chart(2, false);
  GeneratorSet gen = build_generators(chart);
  CHECK(poisson_bracket(chart, gen.x2, gen.y2) == gen.w);
  CHECK(poisson_bracket(chart, gen.w, gen.x2) == gen.x2.scaled(Coeff(-2)));
  CHECK(poisson_bracket(chart, gen.y2, gen.y1).is_zero());
  CHECK(poisson_bracket(chart, gen.y2, gen.x1) == gen.y1);
  CHECK(poisson_bracket(chart, gen.x2, gen.y1) == -gen.x1);
}

TEST_CASE("the degenerate case r = 1 has {x1, y1} = 2") {
  EtaleChart chart = make_chart(1, false);
  GeneratorSet gen = build_generators(chart);
  CHECK(poisson_bracket(chart, gen.x1, gen.y1) ==
        plain(Poly::constant(chart.ring, Coeff(2))));
}

TEST_CASE("abstract relations") {
  RingPtr ring = generator_ring(2, false);
  Poly x1 = Poly::variable(ring, "x1"), y1 = Poly::variable(ring, "y1"),
       x2 = Poly::variable(ring, "x2"), y2 = Poly::variable(ring, "y2"),
       w = Poly::variable(ring, "w");
  Poly D = w * w - (x2 * y2).scaled(Coeff(4));
  Poly S = x1 * x1 * y2 + x2 * y1 * y1 + w * x1 * y1;
  CHECK(branch_relation(ring, 2) == D * D - S);
  CHECK(branch_relation(ring, 2, Mutation::RelationExponent) == D.pow(3) - S);
  long deg = 0;
  CHECK(branch_relation(ring, 2).is_homogeneous({3, 3, 2, 2, 2}, &deg));
  CHECK(deg == 8);
  // z -> 0 of the deformed relation is minus the branch relation.
  RingPtr fring = generator_ring(2, true);
  Poly def = deformed_relation(fring, 2);
  std::map<int, Poly> z_zero{{fring->index("z1"), Poly(fring)},
                             {fring->index("z2"), Poly(fring)}};
  CHECK(subst_poly(def, z_zero) == -transport(branch_relation(ring, 2), fring));
}

TEST_CASE("eval_on_chart kills the relation") {
  for (int r = 1; r <= 3; ++r) {
    EtaleChart chart = make_chart(r, false);
    GeneratorSet gen = build_generators(chart);
    RingPtr ring = generator_ring(r, false);
    CHECK(eval_on_chart(branch_relation(ring, r), chart, gen).is_zero());
  }
}

TEST_CASE("check functions pass on the healthy configuration") {
  for (int r = 1; r <= 3; ++r) {
    INFO("r = ", r);
    CHECK(check_relation(r) == "");
    CHECK(check_generators(r, false) == "");
  }
  for (int r = 2; r <= 3; ++r) {
    INFO("r = ", r);
    CHECK(check_generators(r, true) == "");
    CHECK(check_redundancy(r) == "");
    CHECK(check_deformed_relation(r) == "");
  }
  std::map<std::string, std::string> derived;
  CHECK(check_bracket_table(2, &derived) == "");
  CHECK(derived.count("bracket.x1y1") == 1);
  CHECK(!derived["bracket.x1y1"].empty());
  CHECK(check_jacobi(2) == "");
  CHECK(check_grading(2) == "");
  CHECK(check_sl2_invariance(2) == "");
  CHECK(check_specialization(2) == "");
  for (int k = 0; k <= 3; ++k) CHECK(check_sigma_parity(3, k) == "");
}

TEST_CASE("trace form constants") {
  std::map<std::string, std::string> derived;
  CHECK(check_trace_form(2, Mutation::None, &derived) == "");
  CHECK(derived["kappa"] == "1/8");
  derived.clear();
  CHECK(check_trace_form(3, Mutation::None, &derived) == "");
  CHECK(derived["kappa"] == "1/32");
}

TEST_CASE("negative controls are detected") {
  CHECK(check_relation(2, Mutation::FlipX2) != "");
  CHECK(check_relation(2, Mutation::FlipY2) != "");
  CHECK(check_relation(2, Mutation::FlipX1Inner) != "");
  CHECK(check_relation(2, Mutation::FlipY1Inner) != "");
  CHECK(check_relation(2, Mutation::RelationExponent) != "");
  CHECK(check_redundancy(2, Mutation::RedundancySign) != "");
  CHECK(check_redundancy(3, Mutation::RedundancySign) != "");
  CHECK(check_trace_form(2, Mutation::LiteralRescale) != "");
}
