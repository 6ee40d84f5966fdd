#include "pclat/patterns.hpp"

#include <bit>
#include <chrono>

#include "pclat/analysis.hpp"
#include "pclat/error.hpp"
#include "pclat/kernels.hpp"

namespace pclat {

const char* to_string(Pattern p) noexcept {
  switch (p) {
    case Pattern::M3: return "M3";
    case Pattern::M23: return "M23";
    case Pattern::N5: return "N5";
  }
  return "?";
}

std::optional<Pattern> parse_pattern(const std::string& name) {
  if (name == "M3") return Pattern::M3;
  if (name == "M23") return Pattern::M23;
  if (name == "N5") return Pattern::N5;
  return std::nullopt;
}

CoverList pattern_covers(Pattern p) {
  switch (p) {
    case Pattern::M3:
      return {5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}, {}};
    case Pattern::M23:
      return {7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 6}, {4, 6}, {5, 6}}, {}};
    case Pattern::N5:
      return {5, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 4}}, {}};
  }
  throw LatticeError(ErrorKind::UnknownFixture, "unknown pattern");
}

const FiniteLattice& pattern_lattice(Pattern p) {
  static const FiniteLattice m3 = FiniteLattice::build_from_covers(pattern_covers(Pattern::M3));
  static const FiniteLattice m23 = FiniteLattice::build_from_covers(pattern_covers(Pattern::M23));
  static const FiniteLattice n5 = FiniteLattice::build_from_covers(pattern_covers(Pattern::N5));
  switch (p) {
    case Pattern::M3: return m3;
    case Pattern::M23: return m23;
    case Pattern::N5: return n5;
  }
  throw LatticeError(ErrorKind::UnknownFixture, "unknown pattern");
}

namespace {

// Elements that generate each pattern; everything else is forced by
// meets and joins once these are placed.
std::vector<Element> pattern_generators(Pattern p) {
  switch (p) {
    case Pattern::M3: return {1, 2, 3};
    case Pattern::M23: return {3, 4, 2};  // l, m, q
    case Pattern::N5: return {1, 2, 3};
  }
  return {};
}

struct Step {
  Element var;
  bool forced = false;
  Element x = 0, y = 0;
  bool is_meet = false;
};

class EmbeddingSearch {
 public:
  EmbeddingSearch(const FiniteLattice& target, Pattern pattern, bool anchor)
      : L_(target), P_(pattern_lattice(pattern)), anchor_(anchor),
        map_(P_.size(), -1), used_(target.size(), 0) {
    plan(pattern);
  }

  std::optional<std::vector<Element>> run() {
    if (P_.size() > L_.size()) return std::nullopt;
    if (descend(0)) return map_;
    return std::nullopt;
  }

 private:
  void plan(Pattern pattern) {
    std::vector<char> placed(P_.size(), 0);
    auto place = [&](Step s) {
      placed[s.var] = 1;
      steps_.push_back(s);
    };
    if (anchor_) place({P_.bottom(), true, -1, -1, false});
    const auto gens = pattern_generators(pattern);
    std::size_t next_gen = 0;
    while (static_cast<int>(steps_.size()) < P_.size()) {
      bool progressed = false;
      for (Element x = 0; x < P_.size() && !progressed; ++x) {
        for (Element y = x + 1; y < P_.size() && !progressed; ++y) {
          if (!placed[x] || !placed[y]) continue;
          for (bool is_meet : {true, false}) {
            const Element v = is_meet ? P_.meet(x, y) : P_.join(x, y);
            if (!placed[v]) {
              place({v, true, x, y, is_meet});
              progressed = true;
              break;
            }
          }
        }
      }
      if (progressed) continue;
      while (next_gen < gens.size() && placed[gens[next_gen]]) ++next_gen;
      if (next_gen < gens.size()) {
        place({gens[next_gen], false});
      } else {
        for (Element v = 0; v < P_.size(); ++v) {
          if (!placed[v]) {
            place({v, false});
            break;
          }
        }
      }
    }
  }

  bool descend(std::size_t depth) {
    if (depth == steps_.size()) return true;
    const Step& s = steps_[depth];
    if (s.forced) {
      Element t;
      if (s.x < 0) t = L_.bottom();
      else t = s.is_meet ? L_.meet(map_[s.x], map_[s.y]) : L_.join(map_[s.x], map_[s.y]);
      return attempt(depth, t);
    }
    // targets must sit in the right up-set, down-set or neither of every
    // placed image
    const BitMatrix& up = L_.up_sets();
    const BitMatrix& down = L_.down_sets();
    std::vector<std::uint64_t> cand(up.words(), ~std::uint64_t{0});
    if (L_.size() % 64) cand.back() = (std::uint64_t{1} << (L_.size() % 64)) - 1;
    for (Element u = 0; u < P_.size(); ++u) {
      const Element mu = map_[u];
      if (mu < 0) continue;
      const auto um = up.row(mu), dm = down.row(mu);
      for (std::size_t w = 0; w < cand.size(); ++w) {
        if (P_.leq(u, s.var)) cand[w] &= um[w];
        else if (P_.leq(s.var, u)) cand[w] &= dm[w];
        else cand[w] &= ~(um[w] | dm[w]);
      }
    }
    for (std::size_t w = 0; w < cand.size(); ++w) {
      for (std::uint64_t bits = cand[w]; bits; bits &= bits - 1) {
        if (attempt(depth, static_cast<Element>(w * 64 + std::countr_zero(bits)))) return true;
      }
    }
    return false;
  }

  bool attempt(std::size_t depth, Element t) {
    const Element v = steps_[depth].var;
    if (used_[t] || !consistent(v, t)) return false;
    map_[v] = t;
    used_[t] = 1;
    if (descend(depth + 1)) return true;
    used_[t] = 0;
    map_[v] = -1;
    return false;
  }

  // Order relations with every placed element, and every meet/join among
  // placed elements that involves v as an operand or as the result.
  bool consistent(Element v, Element t) const {
    for (Element u = 0; u < P_.size(); ++u) {
      const Element mu = map_[u];
      if (mu < 0) continue;
      if (P_.leq(u, v) != L_.leq(mu, t) || P_.leq(v, u) != L_.leq(t, mu)) return false;
    }
    auto image = [&](Element x) { return x == v ? t : map_[x]; };
    for (Element x = 0; x < P_.size(); ++x) {
      if (image(x) < 0) continue;
      for (Element y = x + 1; y < P_.size(); ++y) {
        if (image(y) < 0) continue;
        const Element m = P_.meet(x, y);
        const Element j = P_.join(x, y);
        if (x != v && y != v && m != v && j != v) continue;
        if (image(m) >= 0 && image(m) != L_.meet(image(x), image(y))) return false;
        if (image(j) >= 0 && image(j) != L_.join(image(x), image(y))) return false;
      }
    }
    return true;
  }

  const FiniteLattice& L_;
  const FiniteLattice& P_;
  bool anchor_;
  std::vector<Step> steps_;
  std::vector<Element> map_;
  std::vector<char> used_;
};

double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::optional<PatternEmbedding> find_zero_sublattice_embedding(const FiniteLattice& lattice,
                                                               Pattern pattern,
                                                               bool anchor_bottom) {
  EmbeddingSearch search(lattice, pattern, anchor_bottom);
  auto mapping = search.run();
  if (!mapping) return std::nullopt;
  return PatternEmbedding{pattern, std::move(*mapping)};
}

bool is_ternary_witness(const FiniteLattice& L, const TernaryWitness& w) {
  const Element z = L.bottom();
  for (Element x : {w.a, w.b, w.c})
    if (x < 0 || x >= L.size() || x == z) return false;
  const Element ab = L.join(w.a, w.b);
  return L.meet(w.c, w.a) == z && L.meet(w.c, w.b) == z && L.join(w.c, w.a) == ab &&
         L.join(w.c, w.b) == ab;
}

std::optional<TernaryWitness> find_ternary_witness(const FiniteLattice& lattice) {
  auto t = kernels::parallel::ternary_witness(lattice);
  if (!t) return std::nullopt;
  return TernaryWitness{(*t)[0], (*t)[1], (*t)[2]};
}

WitnessClass classify_witness(const FiniteLattice& lattice, const TernaryWitness& w) {
  if (!is_ternary_witness(lattice, w)) {
    throw LatticeError(ErrorKind::InvalidWitness, "triple does not satisfy the witness conditions");
  }
  const Element seeds[] = {w.a, w.b, w.c};
  auto elements = generated_sublattice(lattice, seeds);
  const auto sub = restrict_to_sublattice(lattice, elements);
  for (Pattern p : {Pattern::M3, Pattern::M23}) {
    if (is_isomorphic(sub.lattice, pattern_lattice(p))) return {p, std::move(elements)};
  }
  throw LatticeError(ErrorKind::ClassificationFailed,
                     "witness generates a " + std::to_string(elements.size()) +
                         "-element sublattice that is neither M3 nor M23");
}

AnalysisReport theorem1_report(const FiniteLattice& L, const std::string& subject) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport r;
  r.subject = subject;
  r.kind = "lattice";
  r.size = L.size();
  r.hypothesis = "modular";
  auto cond = [&](std::string key, std::string title, bool value, std::vector<Element> witness,
                  std::string detail = {}) {
    Condition c{std::move(key), std::move(title), value, {}, {}, std::move(detail)};
    c.witness_labels = witness_labels(L, witness);
    c.witness = std::move(witness);
    r.conditions.push_back(std::move(c));
  };
  auto triple = [](const std::optional<Triple>& t) {
    return t ? std::vector<Element>(t->begin(), t->end()) : std::vector<Element>{};
  };

  const auto modular = is_modular(L);
  r.hypothesis_holds = modular.modular;
  cond("modular", "modular", modular.modular, triple(modular.violation));
  const auto distributive = is_distributive(L);
  cond("distributive", "distributive", distributive.distributive, triple(distributive.violation));

  const auto pc = is_pseudocomplemented(L);
  std::vector<Element> pc_witness;
  if (pc.failure) pc_witness = {pc.failure->element, pc.failure->first_maximal, pc.failure->second_maximal};
  cond("a_pseudocomplemented", "(a) pseudocomplemented", pc.pseudocomplemented, pc_witness);

  std::optional<PatternEmbedding> embedding = find_zero_sublattice_embedding(L, Pattern::M3);
  if (!embedding) embedding = find_zero_sublattice_embedding(L, Pattern::M23);
  cond("b_no_forbidden_0_sublattice", "(b) no 0-sublattice M3 or M23", !embedding,
       embedding ? embedding->mapping : std::vector<Element>{},
       embedding ? std::string(to_string(embedding->pattern)) + " embedded" : "");

  const auto witness = find_ternary_witness(L);
  std::string witness_detail;
  if (witness && modular.modular) {
    witness_detail = std::string("generates ") + to_string(classify_witness(L, *witness).pattern);
  }
  cond("c_no_ternary_witness", "(c) no ternary witness", !witness,
       witness ? std::vector<Element>{witness->a, witness->b, witness->c} : std::vector<Element>{},
       witness_detail);

  r.compared = {"a_pseudocomplemented", "b_no_forbidden_0_sublattice", "c_no_ternary_witness"};
  settle_agreement(r);
  r.elapsed_ms = millis_since(start);
  return r;
}

}  // namespace pclat
