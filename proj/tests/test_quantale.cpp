#include <gtest/gtest.h>

#include <numeric>

#include "galois/catalog.hpp"
#include "galois/quantale.hpp"

using namespace galois;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::parse_error;
}

Elem ideal(const Quantale& q, const char* label) { return *q.lattice()->index_of(label); }

std::vector<Quantale> sample_quantales() {
  std::vector<Quantale> out;
  for (unsigned n = 2; n <= 60; ++n) out.push_back(zn_ideal_quantale(n));
  for (const char* name : {"C1", "C2", "C3", "C4", "B1", "B2", "B3", "Div12", "Frame3"})
    out.push_back(frame_quantale(catalog_lattice(name)));
  // The 3-chain with a "nilpotent" middle: m·m = 0.
  out.push_back(build_quantale("Nil3", catalog_lattice("C3"), {0, 0, 0, 0, 0, 1, 0, 1, 2}));
  return out;
}

}  // namespace

TEST(Quantale, ValidationErrors) {
  const auto C2 = catalog_lattice("C2");
  EXPECT_EQ(code_of([&] { build_quantale(C2, {0, 0, 1, 1}); }), Errc::not_commutative);
  EXPECT_EQ(code_of([&] { build_quantale(C2, {0, 0, 0}); }), Errc::dimension_mismatch);
  EXPECT_EQ(code_of([&] { build_quantale(C2, {1, 1, 1, 1}); }), Errc::not_join_preserving);
  const auto V = build_poset("V", {"a", "b", "t"}, {{"a", "t"}, {"b", "t"}});
  EXPECT_EQ(code_of([&] { build_quantale(V, std::vector<Elem>(9, 2)); }), Errc::not_bounded);
  EXPECT_EQ(code_of([] { zn_ideal_quantale(1); }), Errc::invalid_modulus);
}

TEST(Quantale, NonAssociative) {
  // On C3 with m·m = m·1 = 1 and 1·1 = m: (m·m)·1 = m but m·(m·1) = 1.
  const auto C3 = catalog_lattice("C3");
  EXPECT_EQ(code_of([&] { build_quantale(C3, {0, 0, 0, 0, 2, 2, 0, 2, 1}); }), Errc::not_associative);
}

TEST(Quantale, DiamondMeetIsNotAQuantale) {
  try {
    frame_quantale(catalog_lattice("M3"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_join_preserving);
    EXPECT_EQ(std::string(e.what()).rfind("NotJoinPreserving: (a, {b,c})", 0), 0u) << e.what();
  }
}

TEST(Quantale, IdealsOfZ12) {
  const auto q = zn_ideal_quantale(12);
  EXPECT_EQ(q.name(), "Z12");
  EXPECT_EQ(q.size(), 6u);
  EXPECT_EQ(q.mul(ideal(q, "(2)"), ideal(q, "(3)")), ideal(q, "(6)"));
  EXPECT_EQ(q.mul(ideal(q, "(4)"), ideal(q, "(6)")), ideal(q, "(12)"));
  EXPECT_EQ(q.mul(ideal(q, "(2)"), ideal(q, "(2)")), ideal(q, "(4)"));
  EXPECT_EQ(residual(q, ideal(q, "(2)"), ideal(q, "(3)")), ideal(q, "(2)"));
  EXPECT_EQ(q.unit(), ideal(q, "(1)"));
  EXPECT_TRUE(q.is_integral());
  const auto c = element_connection(q, ideal(q, "(2)"));
  EXPECT_EQ(c.left(ideal(q, "(3)")), ideal(q, "(6)"));
}

TEST(Quantale, IdealProductIsGcdOfProduct) {
  for (unsigned n : {4u, 6u, 12u, 30u, 36u}) {
    const auto q = zn_ideal_quantale(n);
    const auto ds = divisors(n);
    for (Elem i = 0; i < ds.size(); ++i)
      for (Elem j = 0; j < ds.size(); ++j)
        EXPECT_EQ(q.lattice()->label(q.mul(i, j)), "(" + std::to_string(std::gcd(ds[i] * ds[j], n)) + ")");
  }
}

TEST(Quantale, FrameResidual) {
  const auto q = frame_quantale(frame3());
  EXPECT_EQ(residual(q, 0, 1), 0u);  // bot : m = bot
  EXPECT_EQ(residual(q, 1, 1), 2u);  // m : m = top
  EXPECT_TRUE(q.is_integral());
  EXPECT_EQ(code_of([&] { residual(q, 3, 0); }), Errc::index_out_of_range);
}

TEST(Quantale, NilpotentMiddle) {
  const auto q = build_quantale("Nil3", catalog_lattice("C3"), {0, 0, 0, 0, 0, 1, 0, 1, 2});
  EXPECT_EQ(q.unit(), 2u);
  EXPECT_TRUE(q.is_integral());
  const auto z = zn_ideal_quantale(2);
  EXPECT_EQ(z.unit(), 0u);
}

TEST(Property, ResidualIsTheLargestSolution) {
  for (const auto& q : sample_quantales()) {
    const auto& L = *q.lattice();
    for (Elem a = 0; a < q.size(); ++a)
      for (Elem e = 0; e < q.size(); ++e) {
        const Elem r = residual(q, a, e);
        for (Elem c = 0; c < q.size(); ++c) ASSERT_EQ(L.leq(q.mul(c, e), a), L.leq(c, r)) << q.name();
      }
  }
}

TEST(Principal, EveryIdealOfZnIsPrincipal) {
  for (unsigned n : {4u, 6u, 12u, 30u}) {
    const auto q = zn_ideal_quantale(n);
    for (Elem e = 0; e < q.size(); ++e) {
      const auto p = is_principal(q, e);
      EXPECT_TRUE(p.principal()) << q.name() << " " << q.lattice()->label(e);
      EXPECT_TRUE(p.frobenius()) << q.name() << " " << q.lattice()->label(e);
    }
  }
}

TEST(Principal, FrameMiddleIsNotPrincipal) {
  const auto q = frame_quantale(frame3());
  const auto p = is_principal(q, 1);
  EXPECT_FALSE(p.principal());
  EXPECT_TRUE(p.meet_law.holds());
  ASSERT_TRUE(p.join_law.fails());
  const auto& w = *p.join_law.witness;
  EXPECT_EQ(w.labels, (std::vector<std::string>{"m", "bot"}));
  EXPECT_EQ(w.lhs_label, "m");
  EXPECT_EQ(w.rhs_label, "top");
  // Reproduce (ii) at the witness by hand: a ∨ (b:e) against (a·e ∨ b):e.
  const auto& L = *q.lattice();
  const Elem a = w.values[0], b = w.values[1];
  EXPECT_EQ(*L.join(a, residual(q, b, 1)), *w.lhs.value);
  EXPECT_EQ(residual(q, *L.join(q.mul(a, 1), b), 1), *w.rhs.value);

  EXPECT_TRUE(p.routes_agree());
  ASSERT_TRUE(p.rf0.fails());
  EXPECT_EQ(p.rf0.witness->labels, (std::vector<std::string>{"m", "bot"}));

  const auto weak = is_weak_principal(q, 1);
  EXPECT_FALSE(weak.weak_principal());
  ASSERT_TRUE(weak.rm0.fails());
  EXPECT_EQ(weak.rm0.witness->labels, (std::vector<std::string>{"m"}));
  EXPECT_EQ(weak.rm0.witness->lhs_label, "top");
  EXPECT_EQ(weak.rm0.witness->rhs_label, "m");
}

TEST(Property, PrincipalRoutesAgreeAndImplyWeakPrincipal) {
  std::size_t principal = 0, not_principal = 0;
  for (const auto& q : sample_quantales())
    for (Elem e = 0; e < q.size(); ++e) {
      const auto p = is_principal(q, e);
      ASSERT_TRUE(p.routes_agree()) << q.name() << " " << q.lattice()->label(e);
      if (p.principal()) {
        ++principal;
        EXPECT_TRUE(is_weak_principal(q, e).weak_principal()) << q.name() << " " << q.lattice()->label(e);
      } else {
        ++not_principal;
      }
    }
  EXPECT_GT(principal, 0u);
  EXPECT_GT(not_principal, 0u);
}

TEST(Property, UnitIsPrincipalInIntegralQuantales) {
  for (const auto& q : sample_quantales()) {
    if (!q.is_integral()) continue;
    EXPECT_TRUE(is_principal(q, *q.unit()).principal()) << q.name();
  }
}
