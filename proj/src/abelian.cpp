#include "pclat/abelian.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "order_util.hpp"
#include "pclat/analysis.hpp"
#include "pclat/error.hpp"
#include "pclat/patterns.hpp"

namespace pclat {

long AbelianGroupSpec::order() const {
  long n = 1;
  for (int f : factors) n *= f;
  return n;
}

std::string AbelianGroupSpec::name() const {
  if (factors.empty()) return "Z1";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "x";
    out += "Z" + std::to_string(factors[i]);
  }
  return out;
}

void AbelianGroupSpec::validate(int max_order) const {
  long n = 1;
  for (int f : factors) {
    if (f < 2) throw LatticeError(ErrorKind::InvalidInput, "group factors must be at least 2");
    n *= f;
    if (n > max_order) {
      throw LatticeError(ErrorKind::OrderTooLarge,
                         "group order exceeds the bound " + std::to_string(max_order));
    }
  }
}

AbelianGroupSpec AbelianGroupSpec::parse(const std::string& text) {
  AbelianGroupSpec spec;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty() || item.size() > 9 || !std::all_of(item.begin(), item.end(), ::isdigit)) {
      throw LatticeError(ErrorKind::ParseError, "bad factor list '" + text + "'");
    }
    const int f = std::stoi(item);
    if (f == 1) continue;
    if (f < 1) throw LatticeError(ErrorKind::ParseError, "factors must be positive");
    spec.factors.push_back(f);
  }
  if (text.find_first_not_of(" \t") == std::string::npos) {
    throw LatticeError(ErrorKind::ParseError, "empty factor list");
  }
  return spec;
}

std::vector<int> residues(const AbelianGroupSpec& group, int element) {
  std::vector<int> out(group.factors.size());
  for (std::size_t i = group.factors.size(); i-- > 0;) {
    out[i] = element % group.factors[i];
    element /= group.factors[i];
  }
  return out;
}

std::string describe(const AbelianGroupSpec& group, const Subgroup& subgroup) {
  std::string out = "{";
  for (std::size_t k = 0; k < subgroup.elements.size(); ++k) {
    if (k) out += ",";
    const auto r = residues(group, subgroup.elements[k]);
    if (r.size() == 1) {
      out += std::to_string(r[0]);
    } else {
      out += "(";
      for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + std::to_string(r[i]);
      out += ")";
    }
  }
  return out + "}";
}

namespace {

using Bits = std::vector<std::uint64_t>;

class GroupTables {
 public:
  explicit GroupTables(const AbelianGroupSpec& g) : n_(static_cast<int>(g.order())), sum_(n_ * n_) {
    std::vector<std::vector<int>> digits(n_);
    for (int x = 0; x < n_; ++x) digits[x] = residues(g, x);
    for (int x = 0; x < n_; ++x) {
      for (int y = 0; y < n_; ++y) {
        int index = 0;
        for (std::size_t i = 0; i < g.factors.size(); ++i) {
          index = index * g.factors[i] + (digits[x][i] + digits[y][i]) % g.factors[i];
        }
        sum_[x * n_ + y] = index;
      }
    }
  }

  int order() const { return n_; }
  int add(int x, int y) const { return sum_[x * n_ + y]; }
  std::size_t words() const { return static_cast<std::size_t>(n_ + 63) / 64; }

  Bits cyclic(int g) const {
    Bits out(words(), 0);
    int x = 0;
    do {
      out[x / 64] |= std::uint64_t{1} << (x % 64);
      x = add(x, g);
    } while (x != 0);
    return out;
  }

  // U + V as an element set.
  Bits sum(const Bits& u, const Bits& v) const {
    Bits out(words(), 0);
    for_each_bit(u, [&](int a) {
      for_each_bit(v, [&](int b) {
        const int s = add(a, b);
        out[s / 64] |= std::uint64_t{1} << (s % 64);
      });
    });
    return out;
  }

 private:
  int n_;
  std::vector<int> sum_;
};

Bits to_bits(const Subgroup& s, std::size_t words) {
  Bits out(words, 0);
  for (int x : s.elements) out[x / 64] |= std::uint64_t{1} << (x % 64);
  return out;
}

bool subset(const Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::vector<Subgroup> enumerate_subgroups(const AbelianGroupSpec& group, int max_order) {
  group.validate(max_order);
  const GroupTables tables(group);
  std::set<Bits> cyclic_set;
  for (int g = 0; g < tables.order(); ++g) cyclic_set.insert(tables.cyclic(g));
  const std::vector<Bits> cyclic(cyclic_set.begin(), cyclic_set.end());

  std::set<Bits> seen;
  std::vector<Bits> work{tables.cyclic(0)};
  seen.insert(work.front());
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (const Bits& c : cyclic) {
      if (subset(c, work[i])) continue;
      Bits next = tables.sum(work[i], c);
      if (seen.insert(next).second) work.push_back(std::move(next));
    }
  }

  std::vector<Subgroup> out;
  out.reserve(work.size());
  for (const Bits& b : work) {
    Subgroup s;
    for_each_bit(b, [&](int x) { s.elements.push_back(x); });
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  return out;
}

FiniteLattice subgroup_lattice(const AbelianGroupSpec& group, const std::vector<Subgroup>& subgroups) {
  const int n = static_cast<int>(subgroups.size());
  const std::size_t words = static_cast<std::size_t>(group.order() + 63) / 64;
  std::vector<Bits> bits;
  bits.reserve(n);
  for (const auto& s : subgroups) bits.push_back(to_bits(s, words));
  BitMatrix up(n), down(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (subgroups[a].elements.size() <= subgroups[b].elements.size() && subset(bits[a], bits[b])) {
        up.set(a, b);
        down.set(b, a);
      }
    }
  }
  CoverList list{n, detail::hasse_covers(up, down), {}};
  for (const auto& s : subgroups) list.labels.push_back(describe(group, s));
  return FiniteLattice::build_from_covers(list);
}

FiniteLattice subgroup_lattice(const AbelianGroupSpec& group, int max_order) {
  return subgroup_lattice(group, enumerate_subgroups(group, max_order));
}

bool is_cyclic(const AbelianGroupSpec& group) {
  long l = 1;
  for (int f : group.factors) l = std::lcm(l, static_cast<long>(f));
  return l == group.order();
}

std::optional<SubgroupTriple> find_subgroup_triple_witness(const AbelianGroupSpec& group,
                                                           const std::vector<Subgroup>& subgroups) {
  const GroupTables tables(group);
  const int n = static_cast<int>(subgroups.size());
  std::vector<Bits> bits;
  for (const auto& s : subgroups) bits.push_back(to_bits(s, tables.words()));
  auto trivial_meet = [&](int x, int y) {
    for (std::size_t w = 0; w < tables.words(); ++w) {
      std::uint64_t common = bits[x][w] & bits[y][w];
      if (w == 0) common &= ~std::uint64_t{1};
      if (common) return false;
    }
    return true;
  };
  std::map<std::pair<int, int>, Bits> sums;
  auto sum = [&](int x, int y) -> const Bits& {
    const auto key = std::minmax(x, y);
    auto it = sums.find(key);
    if (it == sums.end()) it = sums.emplace(key, tables.sum(bits[x], bits[y])).first;
    return it->second;
  };
  for (int u = 0; u < n; ++u) {
    if (subgroups[u].elements.size() == 1) continue;
    for (int v = 0; v < n; ++v) {
      if (v == u || subgroups[v].elements.size() == 1) continue;
      for (int w = 0; w < n; ++w) {
        if (subgroups[w].elements.size() == 1) continue;
        if (!trivial_meet(u, w) || !trivial_meet(v, w)) continue;
        const Bits& uv = sum(u, v);
        if (sum(u, w) == uv && sum(v, w) == uv) return SubgroupTriple{u, v, w};
      }
    }
  }
  return std::nullopt;
}

std::optional<SubgroupTriple> find_subgroup_triple_witness(const AbelianGroupSpec& group, int max_order) {
  return find_subgroup_triple_witness(group, enumerate_subgroups(group, max_order));
}

AnalysisReport theorem3_report(const AbelianGroupSpec& group, int max_order) {
  const auto start = std::chrono::steady_clock::now();
  const auto subgroups = enumerate_subgroups(group, max_order);
  const FiniteLattice L = subgroup_lattice(group, subgroups);

  AnalysisReport r;
  r.subject = group.name();
  r.kind = "group";
  r.size = L.size();
  r.hypothesis = "abelian (subgroup lattice is modular)";
  r.hypothesis_holds = true;
  auto cond = [&](std::string key, std::string title, bool value, std::vector<Element> witness,
                  std::string detail = {}) {
    Condition c{std::move(key), std::move(title), value, {}, {}, std::move(detail)};
    c.witness_labels = witness_labels(L, witness);
    c.witness = std::move(witness);
    r.conditions.push_back(std::move(c));
  };

  const auto distributive = is_distributive(L);
  cond("i_distributive", "(i) L(G) distributive", distributive.distributive,
       distributive.violation ? std::vector<Element>(distributive.violation->begin(),
                                                     distributive.violation->end())
                              : std::vector<Element>{});

  cond("ii_cyclic", "(ii) cyclic (= locally cyclic, finite case)", is_cyclic(group), {});

  const auto pc = is_pseudocomplemented(L);
  std::vector<Element> pc_witness;
  if (pc.failure) pc_witness = {pc.failure->element, pc.failure->first_maximal, pc.failure->second_maximal};
  cond("iii_pseudocomplemented", "(iii) L(G) pseudocomplemented", pc.pseudocomplemented, pc_witness);

  std::optional<PatternEmbedding> embedding = find_zero_sublattice_embedding(L, Pattern::M3);
  if (!embedding) embedding = find_zero_sublattice_embedding(L, Pattern::M23);
  cond("iv_no_forbidden_0_sublattice", "(iv) no 0-sublattice M3 or M23", !embedding,
       embedding ? embedding->mapping : std::vector<Element>{},
       embedding ? std::string(to_string(embedding->pattern)) + " embedded" : "");

  const auto triple = find_subgroup_triple_witness(group, subgroups);
  cond("v_no_subgroup_triple", "(v) no subgroup triple U, V, W", !triple,
       triple ? std::vector<Element>{triple->u, triple->v, triple->w} : std::vector<Element>{});

  r.compared = {"i_distributive", "ii_cyclic", "iii_pseudocomplemented",
                "iv_no_forbidden_0_sublattice", "v_no_subgroup_triple"};
  settle_agreement(r);
  r.elapsed_ms = millis_since(start);
  return r;
}

std::vector<AbelianGroupSpec> all_factor_multisets(int max_order) {
  std::vector<AbelianGroupSpec> out{AbelianGroupSpec{}};
  std::vector<int> current;
  auto extend = [&](auto&& self, int min_factor, long product) -> void {
    for (int f = min_factor; product * f <= max_order; ++f) {
      current.push_back(f);
      out.push_back(AbelianGroupSpec{current});
      self(self, f, product * f);
      current.pop_back();
    }
  };
  extend(extend, 2, 1);
  return out;
}

}  // namespace pclat
