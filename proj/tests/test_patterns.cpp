#include <doctest.h>

#include "oracles.hpp"
#include "pclat/abelian.hpp"
#include "pclat/analysis.hpp"
#include "pclat/error.hpp"
#include "pclat/generators.hpp"
#include "pclat/patterns.hpp"

using namespace pclat;

TEST_CASE("fixture shapes") {
  const auto& m3 = pattern_lattice(Pattern::M3);
  CHECK(m3.size() == 5);
  CHECK(m3.atoms().size() == 3);
  CHECK(m3.height() == 2);
  const auto& m23 = pattern_lattice(Pattern::M23);
  CHECK(m23.size() == 7);
  CHECK(m23.atoms() == std::vector<Element>{1, 2});
  CHECK(m23.lower_covers(m23.top()) == std::vector<Element>{3, 4, 5});
  CHECK(m23.upper_covers(1) == std::vector<Element>{3, 4, 5});
  CHECK(m23.upper_covers(2) == std::vector<Element>{5});
  CHECK(m23.covers().size() == 9);
  CHECK_FALSE(is_isomorphic(m3, pattern_lattice(Pattern::N5)));
}

TEST_CASE("anchored embeddings in M23") {
  const auto& m23 = pattern_lattice(Pattern::M23);
  const auto self = find_zero_sublattice_embedding(m23, Pattern::M23, true);
  REQUIRE(self);
  CHECK(self->mapping == std::vector<Element>{0, 1, 2, 3, 4, 5, 6});

  CHECK_FALSE(oracle::embeds_by_brute_force(pattern_lattice(Pattern::M3), m23, true));
  CHECK_FALSE(find_zero_sublattice_embedding(m23, Pattern::M3, true));
  // the interval above p is an M3, just not anchored at bottom
  CHECK(oracle::embeds_by_brute_force(pattern_lattice(Pattern::M3), m23, false));
  const auto floating = find_zero_sublattice_embedding(m23, Pattern::M3, false);
  REQUIRE(floating);
  CHECK(floating->mapping == std::vector<Element>{1, 3, 4, 5, 6});
}

TEST_CASE("M3 embeds at the bottom of L(Z2 x Z2)") {
  const auto L = subgroup_lattice(AbelianGroupSpec{{2, 2}});
  const auto subgroups = enumerate_subgroups(AbelianGroupSpec{{2, 2}});
  int order_two = 0;
  for (const auto& s : subgroups) order_two += s.elements.size() == 2;
  CHECK(order_two == 3);
  const auto e = find_zero_sublattice_embedding(L, Pattern::M3);
  REQUIRE(e);
  CHECK(e->mapping.front() == L.bottom());
  CHECK(oracle::is_lattice_embedding(pattern_lattice(Pattern::M3), L, e->mapping));
}

TEST_CASE("embedding search agrees with brute force on small lattices") {
  for (const auto& L : pclat::enumerate_lattices(7)) {
    for (Pattern p : {Pattern::M3, Pattern::M23, Pattern::N5}) {
      for (bool anchor : {true, false}) {
        const auto e = find_zero_sublattice_embedding(L, p, anchor);
        CHECK(e.has_value() == oracle::embeds_by_brute_force(pattern_lattice(p), L, anchor));
        if (e) {
          CHECK(oracle::is_lattice_embedding(pattern_lattice(p), L, e->mapping));
          if (anchor) CHECK(e->mapping[pattern_lattice(p).bottom()] == L.bottom());
          CHECK(find_zero_sublattice_embedding(L, p, anchor) == e);
        }
      }
    }
  }
}

TEST_CASE("unanchored N5 search agrees with the modular law") {
  for (const auto& L : oracle::sample_corpus(7, 40, 20)) {
    CHECK(find_zero_sublattice_embedding(L, Pattern::N5, false).has_value() == !is_modular(L).modular);
  }
}

TEST_CASE("find_ternary_witness") {
  const auto w = find_ternary_witness(pattern_lattice(Pattern::M3));
  REQUIRE(w);
  CHECK(*w == TernaryWitness{1, 2, 3});
  CHECK_FALSE(find_ternary_witness(chain(6)));
  const auto m23 = find_ternary_witness(pattern_lattice(Pattern::M23));
  REQUIRE(m23);
  CHECK(*m23 == TernaryWitness{3, 4, 2});  // (l, m, q)
  for (int n = 1; n <= 500; ++n) CHECK_FALSE(find_ternary_witness(divisor_lattice(n)));
}

TEST_CASE("ternary witnesses re-verify and are lexicographically least") {
  for (const auto& L : oracle::sample_corpus(6, 10, 14)) {
    const auto w = find_ternary_witness(L);
    std::optional<TernaryWitness> brute;
    const Element z = L.bottom();
    for (Element a = 0; a < L.size() && !brute; ++a)
      for (Element b = 0; b < L.size() && !brute; ++b)
        for (Element c = 0; c < L.size() && !brute; ++c) {
          if (a == z || b == z || c == z) continue;
          if (*oracle::glb(L, c, a) != z || *oracle::glb(L, c, b) != z) continue;
          const auto ab = *oracle::lub(L, a, b);
          if (*oracle::lub(L, c, a) == ab && *oracle::lub(L, c, b) == ab) brute = TernaryWitness{a, b, c};
        }
    CHECK(w == brute);
    if (w) CHECK(is_ternary_witness(L, *w));
  }
}

TEST_CASE("classify_witness") {
  const auto m3 = classify_witness(pattern_lattice(Pattern::M3), {1, 2, 3});
  CHECK(m3.pattern == Pattern::M3);
  CHECK(m3.elements.size() == 5);
  const auto m23 = classify_witness(pattern_lattice(Pattern::M23), {3, 4, 2});
  CHECK(m23.pattern == Pattern::M23);
  CHECK(m23.elements.size() == 7);

  // Z2 x Z4: a witness with a nontrivial meet(a, b) generates M23
  const auto L = subgroup_lattice(AbelianGroupSpec{{2, 4}});
  bool saw_m23 = false;
  for (Element a = 0; a < L.size(); ++a)
    for (Element b = 0; b < L.size(); ++b)
      for (Element c = 0; c < L.size(); ++c) {
        const TernaryWitness w{a, b, c};
        if (!is_ternary_witness(L, w)) continue;
        const auto cls = classify_witness(L, w);
        CHECK(cls.pattern == (L.meet(a, b) == L.bottom() ? Pattern::M3 : Pattern::M23));
        saw_m23 |= cls.pattern == Pattern::M23;
      }
  CHECK(saw_m23);

  try {
    (void)classify_witness(pattern_lattice(Pattern::M3), {1, 2, 4});
    FAIL("expected InvalidWitness");
  } catch (const LatticeError& e) {
    CHECK(e.kind() == ErrorKind::InvalidWitness);
  }
}

TEST_CASE("classify_witness fails outside modular lattices") {
  // 0 < e < a, b < t and 0 < c < t: (a, b, c) is a witness with
  // c v e = a v b, so it generates a 6-element lattice containing N5
  const auto L = FiniteLattice::build_from_covers(
      {6, {{0, 1}, {1, 2}, {1, 3}, {2, 5}, {3, 5}, {0, 4}, {4, 5}}, {}});
  CHECK_FALSE(is_modular(L).modular);
  REQUIRE(is_ternary_witness(L, {2, 3, 4}));
  bool failed = false;
  try {
    (void)classify_witness(L, {2, 3, 4});
  } catch (const LatticeError& e) {
    CHECK(e.kind() == ErrorKind::ClassificationFailed);
    failed = true;
  }
  CHECK(failed);
}

TEST_CASE("theorem1_report") {
  const auto m3 = theorem1_report(pattern_lattice(Pattern::M3), "M3");
  CHECK(m3.hypothesis_holds);
  CHECK_FALSE(m3.condition("a_pseudocomplemented").value);
  CHECK_FALSE(m3.condition("b_no_forbidden_0_sublattice").value);
  CHECK_FALSE(m3.condition("c_no_ternary_witness").value);
  CHECK(m3.condition("c_no_ternary_witness").detail == "generates M3");
  CHECK(m3.agree);

  const auto d360 = theorem1_report(divisor_lattice(360));
  CHECK(d360.hypothesis_holds);
  CHECK(d360.condition("a_pseudocomplemented").value);
  CHECK(d360.condition("b_no_forbidden_0_sublattice").value);
  CHECK(d360.condition("c_no_ternary_witness").value);
  CHECK(d360.agree);

  const auto n5 = theorem1_report(pattern_lattice(Pattern::N5));
  CHECK_FALSE(n5.hypothesis_holds);
  CHECK(n5.condition("a_pseudocomplemented").value);
  CHECK(n5.condition("b_no_forbidden_0_sublattice").value);
  CHECK(n5.condition("c_no_ternary_witness").value);
  CHECK_FALSE(n5.violation());
}

TEST_CASE("conditions (a), (b), (c) coincide on modular lattices up to size 8") {
  int modular = 0;
  for (const auto& L : enumerate_lattices(8)) {
    const auto r = theorem1_report(L);
    if (!r.hypothesis_holds) continue;
    ++modular;
    CHECK(r.agree);
  }
  CHECK(modular > 0);
}
