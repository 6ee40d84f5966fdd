#include "pclat/analysis.hpp"

#include "pclat/error.hpp"
#include "pclat/kernels.hpp"

namespace pclat {

ModularityVerdict is_modular(const FiniteLattice& L) {
  auto violation = kernels::parallel::modular_violation(L);
  return {!violation.has_value(), violation};
}

DistributivityVerdict is_distributive(const FiniteLattice& L) {
  auto violation = kernels::parallel::distributive_violation(L);
  return {!violation.has_value(), violation};
}

// The disjoint set is a down-set, so an element is maximal in it iff none
// of its upper covers is disjoint from a.
std::vector<Element> maximal_disjoint(const FiniteLattice& L, Element a) {
  const Element zero = L.bottom();
  std::vector<Element> out;
  for (Element x = 0; x < L.size(); ++x) {
    if (L.meet(a, x) != zero) continue;
    bool maximal = true;
    for (Element y : L.upper_covers(x)) {
      if (L.meet(a, y) == zero) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(x);
  }
  return out;
}

std::optional<Element> pseudocomplement(const FiniteLattice& L, Element a) {
  const Element zero = L.bottom();
  Element candidate = zero;
  for (Element x = 0; x < L.size(); ++x) {
    if (L.meet(a, x) == zero) candidate = L.join(candidate, x);
  }
  if (L.meet(a, candidate) != zero) return std::nullopt;
  return candidate;
}

PseudocomplementVerdict is_pseudocomplemented(const FiniteLattice& L) {
  std::vector<Element> pc(L.size());
  for (Element a = 0; a < L.size(); ++a) {
    auto star = pseudocomplement(L, a);
    if (!star) {
      const auto maxima = maximal_disjoint(L, a);
      return {false, std::nullopt, PseudocomplementFailure{a, maxima.at(0), maxima.at(1)}};
    }
    pc[a] = *star;
  }
  return {true, std::move(pc), std::nullopt};
}

Proposition1Verdict check_proposition1(const FiniteLattice& L) {
  if (auto v = is_modular(L); !v.modular) {
    throw LatticeError(ErrorKind::NotModular, "the lattice is not modular");
  }
  const Element zero = L.bottom();
  for (Element a = 0; a < L.size(); ++a) {
    for (Element b : maximal_disjoint(L, a)) {
      const Element ab = L.join(a, b);
      for (Element x = 0; x < L.size(); ++x) {
        if (x != zero && L.meet(ab, x) == zero) return {false, Triple{a, b, x}};
      }
    }
  }
  return {};
}

}  // namespace pclat
