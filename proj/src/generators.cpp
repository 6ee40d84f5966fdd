#include "pclat/generators.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <regex>

#include "pclat/error.hpp"
#include "order_util.hpp"

namespace pclat {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw LatticeError(ErrorKind::OutOfRange, what);
}

// Bounded draw in [0, bound). Plain modulo keeps results identical across
// standard libraries, unlike std::uniform_int_distribution.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t attempt) noexcept {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (attempt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

FiniteLattice divisor_lattice(std::int64_t n) {
  require(n >= 1 && n <= 1'000'000, "divisor lattice needs 1 <= n <= 10^6");
  std::vector<std::int64_t> divisors, primes;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divisors.push_back(d);
      if (d * d != n) divisors.push_back(n / d);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  std::int64_t rest = n;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    if (rest % p == 0) {
      primes.push_back(p);
      while (rest % p == 0) rest /= p;
    }
  }
  if (rest > 1) primes.push_back(rest);

  CoverList list;
  list.size = static_cast<int>(divisors.size());
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    list.labels.push_back(std::to_string(divisors[i]));
    for (std::int64_t p : primes) {
      const std::int64_t up = divisors[i] * p;
      if (n % up != 0) continue;
      const auto j = std::lower_bound(divisors.begin(), divisors.end(), up) - divisors.begin();
      list.covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return FiniteLattice::build_from_covers(list);
}

FiniteLattice chain(int k) {
  require(k >= 1 && k <= 4096, "chain length must be in [1, 4096]");
  CoverList list{k, {}, {}};
  for (int i = 0; i + 1 < k; ++i) list.covers.emplace_back(i, i + 1);
  return FiniteLattice::build_from_covers(list);
}

FiniteLattice boolean_lattice(int k) {
  require(k >= 0 && k <= 12, "boolean lattice rank must be in [0, 12]");
  const int n = 1 << k;
  std::vector<unsigned> masks(n);
  std::iota(masks.begin(), masks.end(), 0u);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    return std::popcount(a) < std::popcount(b);
  });
  std::vector<int> index(n);
  for (int i = 0; i < n; ++i) index[masks[i]] = i;
  CoverList list{n, {}, {}};
  for (int i = 0; i < n; ++i) {
    std::string label = "{";
    for (int bit = 0; bit < k; ++bit) {
      if (masks[i] >> bit & 1u) {
        if (label.size() > 1) label += ",";
        label += std::to_string(bit);
      } else {
        list.covers.emplace_back(i, index[masks[i] | (1u << bit)]);
      }
    }
    list.labels.push_back(label + "}");
  }
  std::sort(list.covers.begin(), list.covers.end());
  return FiniteLattice::build_from_covers(list);
}

FiniteLattice diamond(int k) {
  require(k >= 1 && k <= 4094, "diamond width must be in [1, 4094]");
  CoverList list{k + 2, {}, {}};
  for (int i = 1; i <= k; ++i) {
    list.covers.emplace_back(0, i);
    list.covers.emplace_back(i, k + 1);
  }
  return FiniteLattice::build_from_covers(list);
}

FiniteLattice fixture(const std::string& name) {
  if (auto p = parse_pattern(name)) return pattern_lattice(*p);
  static const std::regex parametrized(R"((chain|boolean)(?:\((\d+)\)|:(\d+)))");
  std::smatch m;
  if (std::regex_match(name, m, parametrized)) {
    const std::string digits = m[2].matched ? m[2].str() : m[3].str();
    require(digits.size() <= 6, "fixture parameter too large");
    const int k = std::stoi(digits);
    return m[1] == "chain" ? chain(k) : boolean_lattice(k);
  }
  throw LatticeError(ErrorKind::UnknownFixture, "unknown fixture '" + name + "'");
}

FiniteLattice product(const FiniteLattice& left, const FiniteLattice& right) {
  const int nl = left.size();
  const int nr = right.size();
  require(static_cast<long>(nl) * nr <= 1'000'000, "product too large");
  CoverList list{nl * nr, {}, {}};
  for (int i = 0; i < nl; ++i) {
    for (int j = 0; j < nr; ++j) {
      for (Element i2 : left.upper_covers(i)) list.covers.emplace_back(i * nr + j, i2 * nr + j);
      for (Element j2 : right.upper_covers(j)) list.covers.emplace_back(i * nr + j, i * nr + j2);
    }
  }
  return FiniteLattice::build_from_covers(list);
}

FiniteLattice glued_sum(const FiniteLattice& lower, const FiniteLattice& upper) {
  const int nl = lower.size();
  std::vector<int> index(upper.size());
  int next = nl;
  for (Element e = 0; e < upper.size(); ++e) index[e] = e == upper.bottom() ? lower.top() : next++;
  CoverList list{next, lower.covers(), {}};
  for (const auto& [lo, hi] : upper.covers()) list.covers.emplace_back(index[lo], index[hi]);
  return FiniteLattice::build_from_covers(list);
}

FiniteLattice relabel(const FiniteLattice& lattice, std::span<const Element> perm) {
  const int n = lattice.size();
  if (static_cast<int>(perm.size()) != n) throw LatticeError(ErrorKind::InvalidInput, "permutation size mismatch");
  std::vector<char> seen(n, 0);
  for (Element p : perm) {
    if (p < 0 || p >= n || seen[p]) throw LatticeError(ErrorKind::InvalidInput, "not a permutation");
    seen[p] = 1;
  }
  CoverList list{n, {}, {}};
  for (const auto& [lo, hi] : lattice.covers()) list.covers.emplace_back(perm[lo], perm[hi]);
  std::sort(list.covers.begin(), list.covers.end());
  if (lattice.has_labels()) {
    list.labels.resize(n);
    for (Element x = 0; x < n; ++x) list.labels[perm[x]] = lattice.labels()[x];
  }
  return FiniteLattice::build_from_covers(list);
}

namespace {

// Strict orders on m <= 6 inner points are held as m*m bit codes: bit
// (i*m + j) set means i < j.
using Code = std::uint64_t;

bool rel(Code code, int m, int i, int j) { return (code >> (i * m + j)) & 1u; }

// With a bottom and top adjoined, does every pair of inner points have a
// least upper bound and a greatest lower bound?
bool bounded_is_lattice(Code code, int m) {
  std::vector<unsigned> up(m), down(m);  // inner strict bounds plus self
  for (int i = 0; i < m; ++i) {
    up[i] = down[i] = 1u << i;
    for (int j = 0; j < m; ++j) {
      if (rel(code, m, i, j)) up[i] |= 1u << j;
      if (rel(code, m, j, i)) down[i] |= 1u << j;
    }
  }
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      for (bool upper : {true, false}) {
        const unsigned common = upper ? (up[a] & up[b]) : (down[a] & down[b]);
        // empty common set: the adjoined top (or bottom) is the bound
        if (!common) continue;
        bool found = false;
        for (int x = 0; x < m && !found; ++x) {
          if (!(common >> x & 1u)) continue;
          const unsigned reach = upper ? up[x] : down[x];
          if ((common & reach) == common) found = true;
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

Code canonical_code(Code code, int m) {
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  Code best = ~Code{0};
  do {
    Code c = 0;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (rel(code, m, i, j)) c |= Code{1} << (perm[i] * m + perm[j]);
    best = std::min(best, c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

FiniteLattice from_inner_code(Code code, int m) {
  const int n = m + 2;
  BitMatrix up(n), down(n);
  auto relate = [&](int a, int b) {
    up.set(a, b);
    down.set(b, a);
  };
  for (int x = 0; x < n; ++x) {
    relate(0, x);
    relate(x, n - 1);
    relate(x, x);
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (rel(code, m, i, j)) relate(i + 1, j + 1);
  return FiniteLattice::build_from_covers(CoverList{n, detail::hasse_covers(up, down), {}});
}

}  // namespace

std::vector<FiniteLattice> enumerate_lattices(int max_size) {
  require(max_size >= 1 && max_size <= 8, "enumeration size must be in [1, 8]");
  std::vector<FiniteLattice> out;
  out.push_back(chain(1));
  if (max_size >= 2) out.push_back(chain(2));
  for (int n = 3; n <= max_size; ++n) {
    const int m = n - 2;
    // Naturally labeled strict orders: relations only from i to j > i.
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) slots.emplace_back(i, j);
    const std::uint32_t total = 1u << slots.size();
    std::vector<Code> candidates;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
      Code code = 0;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask >> s & 1u) code |= Code{1} << (slots[s].first * m + slots[s].second);
      bool transitive = true;
      for (int i = 0; i < m && transitive; ++i)
        for (int j = i + 1; j < m && transitive; ++j)
          for (int k = j + 1; k < m && transitive; ++k)
            if (rel(code, m, i, j) && rel(code, m, j, k) && !rel(code, m, i, k)) transitive = false;
      if (transitive && bounded_is_lattice(code, m)) candidates.push_back(code);
    }
    std::vector<Code> canonical(candidates.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t i = 0; i < candidates.size(); ++i) canonical[i] = canonical_code(candidates[i], m);
    std::sort(canonical.begin(), canonical.end());
    canonical.erase(std::unique(canonical.begin(), canonical.end()), canonical.end());
    for (Code c : canonical) out.push_back(from_inner_code(c, m));
  }
  return out;
}

FiniteLattice random_lattice(int size, std::uint64_t seed) {
  require(size >= 2 && size <= 2000, "random lattice size must be in [2, 2000]");
  std::mt19937_64 rng(derive_seed(seed, 0));
  BitMatrix up(size);  // row x: elements >= x
  BitMatrix down(size);
  up.set(0, 0), up.set(0, 1), up.set(1, 1);
  down.set(0, 0), down.set(1, 0), down.set(1, 1);
  std::vector<Element> strict_up;
  for (int x = 2; x < size; ++x) {
    // a ranges over everything except the top (element 1)
    Element a = static_cast<Element>(draw(rng, x - 1));
    if (a >= 1) ++a;
    strict_up.clear();
    for_each_bit(up.row(a), [&](int y) {
      if (y != a) strict_up.push_back(y);
    });
    const Element b = strict_up[draw(rng, strict_up.size())];
    for_each_bit(up.row(b), [&](int y) {
      up.set(x, y);
      down.set(y, x);
    });
    for_each_bit(down.row(a), [&](int y) {
      down.set(x, y);
      up.set(y, x);
    });
    up.set(x, x);
    down.set(x, x);
  }
  CoverList list{size, detail::hasse_covers(up, down), {}};
  return FiniteLattice::build_from_covers(list);
}

FiniteLattice random_modular_lattice(int max_size, std::uint64_t seed) {
  require(max_size >= 4 && max_size <= 2000, "random modular lattice size must be in [4, 2000]");
  std::mt19937_64 rng(derive_seed(seed, 1));
  auto piece = [&]() -> FiniteLattice {
    switch (draw(rng, 4)) {
      case 0: return chain(2 + static_cast<int>(draw(rng, 2)));
      case 1: return diamond(3 + static_cast<int>(draw(rng, 2)));
      case 2: return pattern_lattice(Pattern::M23);
      default: return boolean_lattice(2);
    }
  };
  FiniteLattice current = piece();
  while (current.size() > max_size) current = piece();
  const int rounds = 1 + static_cast<int>(draw(rng, 4));
  for (int round = 0; round < rounds; ++round) {
    const FiniteLattice next = piece();
    const int op = static_cast<int>(draw(rng, 3));
    if (op == 0 && current.size() * next.size() <= max_size) {
      current = product(current, next);
    } else if (current.size() + next.size() - 1 <= max_size) {
      current = op == 1 ? glued_sum(current, next) : glued_sum(next, current);
    }
  }
  std::vector<Element> perm(current.size());
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[draw(rng, i)]);
  return relabel(current, perm);
}

void CorpusSpec::validate() const {
  require(max_exhaustive_size >= 0 && max_exhaustive_size <= 8, "--max-size must be in [0, 8]");
  require(random_count >= 0, "--random must be non-negative");
  require(random_count == 0 || (random_size >= 2 && random_size <= 2000), "--size must be in [2, 2000]");
  require(divisor_count >= 0 && divisor_count <= 1'000'000, "--divisors must be in [0, 10^6]");
  require(group_max_order >= 0 && group_max_order <= 512, "--groups must be in [0, 512]");
}

}  // namespace pclat
