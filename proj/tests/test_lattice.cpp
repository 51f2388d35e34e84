#include <gtest/gtest.h>

#include <random>

#include "galois/catalog.hpp"
#include "galois/generate.hpp"
#include "galois/lattice.hpp"
#include "oracles.hpp"

using namespace galois;

namespace {

Elem at(const FiniteLattice& L, const char* label) { return *L.index_of(label); }

std::vector<LatticePtr> sample_posets() {
  std::vector<LatticePtr> out = catalog();
  for (const auto& L : lattices_up_to(5)) out.push_back(L);
  std::mt19937 rng(20261015);
  for (int i = 0; i < 40; ++i) out.push_back(oracle::random_poset(rng, 1 + i % 6, 0.4));
  return out;
}

}  // namespace

TEST(Poset, TwoChainFromCovers) {
  auto L = build_poset("P", {"x", "y"}, {{"x", "y"}});
  EXPECT_TRUE(L->is_lattice());
  EXPECT_EQ(L->label(*L->bottom()), "x");
  EXPECT_EQ(L->label(*L->top()), "y");
  EXPECT_TRUE(L->leq(0, 1));
  EXPECT_FALSE(L->leq(1, 0));
}

TEST(Poset, DiamondIsModularButNotDistributive) {
  auto L = build_poset("M", {"bot", "a", "b", "c", "top"},
                       {{"bot", "a"}, {"bot", "b"}, {"bot", "c"}, {"a", "top"}, {"b", "top"}, {"c", "top"}});
  EXPECT_TRUE(L->is_lattice());
  EXPECT_TRUE(L->is_modular());
  EXPECT_FALSE(L->is_distributive());
  EXPECT_EQ(L->meet(at(*L, "a"), at(*L, "b")), at(*L, "bot"));
  EXPECT_EQ(L->join(at(*L, "a"), at(*L, "c")), at(*L, "top"));
}

TEST(Poset, TransitiveClosure) {
  auto L = build_poset("P", {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  EXPECT_TRUE(L->leq(0, 2));
}

TEST(Poset, ConstructionErrors) {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::parse_error;
  };
  EXPECT_EQ(code_of([] { build_poset("P", {"a", "b"}, {{"a", "b"}, {"b", "a"}}); }), Errc::cycle_detected);
  EXPECT_EQ(code_of([] { build_poset("P", {"a", "a"}, {}); }), Errc::duplicate_label);
  EXPECT_EQ(code_of([] { build_poset("P", {"a"}, {{"a", "z"}}); }), Errc::unknown_label);
  EXPECT_EQ(code_of([] { build_poset("P", {}, {}); }), Errc::empty_poset);
  EXPECT_EQ(code_of([] { chain(3)->check_index(3); }), Errc::index_out_of_range);
}

TEST(Poset, NonLatticeHasPartialTables) {
  // Two incomparable minimal elements below one top.
  auto V = build_poset("V", {"a", "b", "t"}, {{"a", "t"}, {"b", "t"}});
  EXPECT_FALSE(V->is_lattice());
  EXPECT_FALSE(V->has_binary_meets());
  EXPECT_TRUE(V->has_binary_joins());
  EXPECT_FALSE(V->bottom().has_value());
  EXPECT_EQ(V->top(), 2u);
  EXPECT_FALSE(V->meet(0, 1).has_value());
  EXPECT_FALSE(V->is_modular());
}

TEST(Catalog, NamesAndOrder) {
  std::vector<std::string> names;
  for (const auto& L : catalog()) names.push_back(L->name());
  EXPECT_EQ(names, (std::vector<std::string>{"C1", "C2", "C3", "C4", "B1", "B2", "B3", "M3", "N5", "Div12", "Frame3"}));
  EXPECT_EQ(catalog_lattice("nope"), nullptr);
}

TEST(Catalog, StructuralFlags) {
  EXPECT_FALSE(catalog_lattice("N5")->is_modular());
  EXPECT_TRUE(catalog_lattice("N5")->is_lattice());
  EXPECT_TRUE(catalog_lattice("B2")->is_distributive());
  EXPECT_TRUE(catalog_lattice("M3")->is_modular());
  EXPECT_FALSE(catalog_lattice("M3")->is_distributive());
  const auto div = catalog_lattice("Div12");
  EXPECT_EQ(div->size(), 6u);
  EXPECT_EQ(div->label(*div->bottom()), "(12)");
  EXPECT_EQ(div->label(*div->top()), "(1)");
  EXPECT_TRUE(div->is_distributive());
  EXPECT_EQ(catalog_lattice("B3")->size(), 8u);
  EXPECT_EQ(catalog_lattice("C3")->labels(), (std::vector<std::string>{"0", "m", "1"}));
}

TEST(Catalog, DivisorIdealsOrderedByReverseDivisibility) {
  const auto L = divisor_lattice(12);
  // (a) <= (b) iff b divides a
  for (Elem i = 0; i < L->size(); ++i)
    for (Elem j = 0; j < L->size(); ++j) {
      const unsigned a = std::stoul(L->label(i).substr(1)), b = std::stoul(L->label(j).substr(1));
      EXPECT_EQ(L->leq(i, j), a % b == 0) << L->label(i) << " " << L->label(j);
    }
  EXPECT_EQ(divisors(30), (std::vector<unsigned>{1, 2, 3, 5, 6, 10, 15, 30}));
}

TEST(Dual, ReversesOrderAndIsAnInvolution) {
  const auto N5 = catalog_lattice("N5");
  const auto op = dual(*N5);
  EXPECT_EQ(op->name(), "N5^op");
  EXPECT_EQ(*dual(*op), *N5);
  EXPECT_FALSE(op->is_modular());
  for (Elem a = 0; a < N5->size(); ++a)
    for (Elem b = 0; b < N5->size(); ++b) {
      EXPECT_EQ(op->leq(a, b), N5->leq(b, a));
      EXPECT_EQ(op->meet(a, b), N5->join(a, b));
    }
  EXPECT_EQ(op->bottom(), N5->top());
}

TEST(PrincipalSets, Examples) {
  const auto C3 = catalog_lattice("C3");
  EXPECT_EQ(down_set(C3, 2).members.size(), 3u);
  const auto M3 = catalog_lattice("M3");
  const auto a = down_set(M3, at(*M3, "a"));
  EXPECT_EQ(a.lattice->labels(), (std::vector<std::string>{"bot", "a"}));
  EXPECT_TRUE(a.lattice->is_lattice());
  EXPECT_EQ(a.to_host(1), at(*M3, "a"));
  EXPECT_FALSE(a.to_local(at(*M3, "b")).has_value());
  const auto N5 = catalog_lattice("N5");
  EXPECT_EQ(up_set(N5, *N5->bottom()).members.size(), 5u);
  EXPECT_EQ(up_set(N5, at(*N5, "c")).lattice->labels(), (std::vector<std::string>{"c", "top"}));
}

TEST(Property, TablesMatchOrderTheoreticBounds) {
  for (const auto& L : sample_posets())
    for (Elem a = 0; a < L->size(); ++a)
      for (Elem b = 0; b < L->size(); ++b) {
        ASSERT_EQ(L->meet(a, b), oracle::glb(*L, a, b)) << L->name();
        ASSERT_EQ(L->join(a, b), oracle::lub(*L, a, b)) << L->name();
      }
}

TEST(Property, FlagsMatchBruteForce) {
  for (const auto& L : sample_posets()) {
    bool meets = true, joins = true;
    for (Elem a = 0; a < L->size(); ++a)
      for (Elem b = 0; b < L->size(); ++b) {
        meets = meets && oracle::glb(*L, a, b).has_value();
        joins = joins && oracle::lub(*L, a, b).has_value();
      }
    EXPECT_EQ(L->has_binary_meets(), meets) << L->name();
    EXPECT_EQ(L->has_binary_joins(), joins) << L->name();
    EXPECT_EQ(L->is_modular(), oracle::dedekind(*L)) << L->name();
    EXPECT_EQ(L->is_distributive(), oracle::distributive(*L)) << L->name();
    if (L->is_distributive()) {
      EXPECT_TRUE(L->is_modular());
    }
  }
}

TEST(Property, DualInvolutionAndFlagSymmetry) {
  for (const auto& L : sample_posets()) {
    const auto op = dual(*L);
    EXPECT_EQ(*dual(*op), *L);
    EXPECT_EQ(op->is_modular(), L->is_modular()) << L->name();
    EXPECT_EQ(op->is_distributive(), L->is_distributive()) << L->name();
    EXPECT_EQ(op->has_binary_meets(), L->has_binary_joins()) << L->name();
  }
}

TEST(Property, PrincipalSetSizes) {
  for (const auto& L : sample_posets())
    for (Elem a = 0; a < L->size(); ++a) {
      std::size_t below = 0, above = 0;
      for (Elem b = 0; b < L->size(); ++b) {
        below += L->leq(b, a);
        above += L->leq(a, b);
      }
      const auto d = down_set(L, a);
      const auto u = up_set(L, a);
      ASSERT_EQ(d.lattice->size(), below);
      ASSERT_EQ(u.lattice->size(), above);
      EXPECT_EQ(d.lattice->top(), d.to_local(a));
      EXPECT_EQ(u.lattice->bottom(), u.to_local(a));
      for (Elem i = 0; i < d.members.size(); ++i)
        for (Elem j = 0; j < d.members.size(); ++j)
          EXPECT_EQ(d.lattice->leq(i, j), L->leq(d.to_host(i), d.to_host(j)));
    }
}

TEST(MonotoneMaps, Validation) {
  const auto C2 = catalog_lattice("C2");
  const auto C3 = catalog_lattice("C3");
  EXPECT_THROW(MonotoneMap(C2, C3, {2, 0}), Error);
  EXPECT_THROW(MonotoneMap(C2, C3, {0}), Error);
  EXPECT_THROW(MonotoneMap(C2, C3, {0, 3}), Error);
  EXPECT_NO_THROW(MonotoneMap(C2, C3, {0, 2}));
  EXPECT_EQ(identity_map(C3).values(), (std::vector<Elem>{0, 1, 2}));
  EXPECT_EQ(constant_map(C2, C3, 1).values(), (std::vector<Elem>{1, 1}));
}

TEST(MonotoneMaps, TwoChainToThreeChainHasSix) {
  const auto maps = monotone_maps(catalog_lattice("C2"), catalog_lattice("C3"));
  ASSERT_EQ(maps.size(), 6u);
  EXPECT_EQ(maps.front().values(), (std::vector<Elem>{0, 0}));
  EXPECT_EQ(maps.back().values(), (std::vector<Elem>{2, 2}));
}

TEST(Property, MonotoneEnumerationMatchesOracle) {
  const auto family = catalog_family({"C1", "C2", "C3", "C4", "B2", "M3", "N5"});
  for (const auto& P : family)
    for (const auto& Q : family) {
      const auto expected = oracle::monotone_tables(*P, *Q);
      std::vector<oracle::Table> got;
      for (const auto& f : monotone_maps(P, Q)) got.push_back(f.values());
      EXPECT_EQ(got, expected) << P->name() << " -> " << Q->name();
    }
}

TEST(Generator, CountsUpToIsomorphism) {
  // Unlabelled lattices on n elements: 1, 1, 1, 2, 5, 15, 53.
  const std::vector<std::size_t> expected{1, 1, 1, 2, 5, 15, 53};
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(lattices_of_size(n).size(), expected[n - 1]) << n;
}

TEST(Generator, EveryOutputIsABoundedLattice) {
  for (const auto& L : lattices_up_to(6)) {
    EXPECT_TRUE(L->is_lattice()) << L->name();
    EXPECT_EQ(L->bottom(), 0u);
    EXPECT_EQ(L->top(), L->size() - 1);
  }
}

TEST(Generator, CanonicalKeyIdentifiesIsomorphicCopies) {
  EXPECT_EQ(canonical_key(*catalog_lattice("N5")), canonical_key(*dual(*catalog_lattice("N5"))));
  EXPECT_NE(canonical_key(*catalog_lattice("B2")), canonical_key(*catalog_lattice("C4")));
  EXPECT_NE(canonical_key(*catalog_lattice("M3")), canonical_key(*catalog_lattice("N5")));
  // Div12 is C3 x C2; relabel it and the key must not move.
  const auto div = catalog_lattice("Div12");
  bool found = false;
  for (const auto& L : lattices_of_size(6)) found = found || canonical_key(*L) == canonical_key(*div);
  EXPECT_TRUE(found);
}
