#include "pclat/finite_lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "pclat/error.hpp"
#include "pclat/kernels.hpp"
#include "order_util.hpp"

namespace pclat {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotAPoset: return "NotAPoset";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NoBoundedStructure: return "NoBoundedStructure";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotModular: return "NotModular";
    case ErrorKind::InvalidWitness: return "InvalidWitness";
    case ErrorKind::ClassificationFailed: return "ClassificationFailed";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

LatticeError::LatticeError(ErrorKind kind, const std::string& what,
                           std::optional<std::pair<int, int>> pair)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), pair_(pair) {}

namespace {

std::string pair_text(int a, int b) {
  std::ostringstream out;
  out << "(" << a << ", " << b << ")";
  return out.str();
}

}  // namespace

FiniteLattice FiniteLattice::build_from_covers(const CoverList& input) {
  const int n = input.size;
  if (n < 1) throw LatticeError(ErrorKind::InvalidInput, "lattice size must be at least 1");
  if (!input.labels.empty() && static_cast<int>(input.labels.size()) != n) {
    throw LatticeError(ErrorKind::InvalidInput, "labels must have exactly `size` entries");
  }

  std::vector<std::vector<Element>> up_adj(n), down_adj(n);
  for (const auto& [lo, hi] : input.covers) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n) {
      throw LatticeError(ErrorKind::InvalidInput, "cover index out of range " + pair_text(lo, hi),
                         std::pair{lo, hi});
    }
    if (lo == hi) {
      throw LatticeError(ErrorKind::NotAPoset, "self-cover " + pair_text(lo, hi), std::pair{lo, hi});
    }
    up_adj[lo].push_back(hi);
    down_adj[hi].push_back(lo);
  }
  for (auto* adj : {&up_adj, &down_adj}) {
    for (auto& v : *adj) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
  }

  // Kahn's algorithm, smallest index first so the linear extension is stable.
  std::vector<int> indegree(n, 0);
  for (int v = 0; v < n; ++v) indegree[v] = static_cast<int>(down_adj[v].size());
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push(v);
  std::vector<Element> topo;
  topo.reserve(n);
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    topo.push_back(v);
    for (int w : up_adj[v])
      if (--indegree[w] == 0) ready.push(w);
  }
  if (static_cast<int>(topo.size()) != n) {
    for (const auto& [lo, hi] : input.covers) {
      if (indegree[lo] > 0 && indegree[hi] > 0) {
        throw LatticeError(ErrorKind::NotAPoset, "covers contain a cycle through " + pair_text(lo, hi),
                           std::pair{lo, hi});
      }
    }
    throw LatticeError(ErrorKind::NotAPoset, "covers contain a cycle");
  }

  FiniteLattice L;
  L.n_ = n;
  L.up_ = BitMatrix(n);
  L.down_ = BitMatrix(n);
  for (int i = n - 1; i >= 0; --i) {
    const int v = topo[i];
    L.up_.set(v, v);
    for (int w : up_adj[v]) L.up_.or_row(v, w);
  }
  for (int v : topo) {
    L.down_.set(v, v);
    for (int w : down_adj[v]) L.down_.or_row(v, w);
  }

  std::vector<Element> minimal, maximal;
  for (int v = 0; v < n; ++v) {
    if (down_adj[v].empty()) minimal.push_back(v);
    if (up_adj[v].empty()) maximal.push_back(v);
  }
  if (minimal.size() != 1 || maximal.size() != 1) {
    std::ostringstream msg;
    msg << minimal.size() << " minimal and " << maximal.size() << " maximal elements";
    std::optional<std::pair<int, int>> pair;
    if (minimal.size() > 1) pair = std::pair{minimal[0], minimal[1]};
    else if (maximal.size() > 1) pair = std::pair{maximal[0], maximal[1]};
    throw LatticeError(ErrorKind::NoBoundedStructure, msg.str(), pair);
  }
  L.bottom_ = minimal[0];
  L.top_ = maximal[0];

  L.upper_.assign(n, {});
  L.lower_.assign(n, {});
  L.covers_ = detail::hasse_covers(L.up_, L.down_);
  for (const auto& [a, b] : L.covers_) {
    L.upper_[a].push_back(b);
    L.lower_[b].push_back(a);
  }

  std::vector<std::size_t> down_count(n), up_count(n);
  for (int v = 0; v < n; ++v) {
    down_count[v] = L.down_.count(v);
    up_count[v] = L.up_.count(v);
  }
  kernels::OrderView view{n, &L.up_, &L.down_, topo, &L.lower_, &L.upper_, down_count, up_count};
  L.meet_ = kernels::parallel::meet_table(view);
  L.join_ = kernels::parallel::join_table(view);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const bool no_meet = L.meet(a, b) == kernels::kMissing;
      if (no_meet || L.join(a, b) == kernels::kMissing) {
        throw LatticeError(ErrorKind::NotALattice,
                           std::string("pair ") + pair_text(a, b) + " has no " +
                               (no_meet ? "greatest lower bound" : "least upper bound"),
                           std::pair{a, b});
      }
    }
  }

  L.height_.assign(n, 0);
  for (int v : topo)
    for (int w : L.upper_[v]) L.height_[w] = std::max(L.height_[w], L.height_[v] + 1);

  L.labels_ = input.labels;
  return L;
}

std::string FiniteLattice::label(Element a) const {
  return labels_.empty() ? std::to_string(a) : labels_[a];
}

CoverList FiniteLattice::to_cover_list() const { return CoverList{n_, covers_, labels_}; }

std::vector<Element> generated_sublattice(const FiniteLattice& L, std::span<const Element> seeds) {
  std::vector<char> in(L.size(), 0);
  std::vector<Element> members;
  for (Element s : seeds) {
    if (s < 0 || s >= L.size()) throw LatticeError(ErrorKind::InvalidInput, "seed out of range");
    if (!in[s]) {
      in[s] = 1;
      members.push_back(s);
    }
  }
  // Each newly added element is combined with everything present so far.
  for (std::size_t next = 0; next < members.size(); ++next) {
    const Element x = members[next];
    for (std::size_t i = 0; i <= next; ++i) {
      const Element y = members[i];
      for (Element z : {L.meet(x, y), L.join(x, y)}) {
        if (!in[z]) {
          in[z] = 1;
          members.push_back(z);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

Sublattice restrict_to_sublattice(const FiniteLattice& L, std::span<const Element> subset) {
  std::vector<Element> members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) throw LatticeError(ErrorKind::InvalidInput, "empty subset");
  std::vector<int> local(L.size(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] < 0 || members[i] >= L.size())
      throw LatticeError(ErrorKind::InvalidInput, "subset element out of range");
    local[members[i]] = static_cast<int>(i);
  }
  for (Element x : members) {
    for (Element y : members) {
      if (y < x) continue;
      if (local[L.meet(x, y)] < 0 || local[L.join(x, y)] < 0) {
        throw LatticeError(ErrorKind::NotClosed,
                           "subset is not closed under meet/join at " + pair_text(x, y),
                           std::pair{x, y});
      }
    }
  }

  CoverList covers;
  covers.size = static_cast<int>(members.size());
  for (Element x : members) {
    for (Element y : members) {
      if (!L.less(x, y)) continue;
      const bool direct = std::none_of(members.begin(), members.end(), [&](Element z) {
        return L.less(x, z) && L.less(z, y);
      });
      if (direct) covers.covers.emplace_back(local[x], local[y]);
    }
  }
  if (L.has_labels())
    for (Element x : members) covers.labels.push_back(L.labels()[x]);
  return Sublattice{FiniteLattice::build_from_covers(covers), std::move(members)};
}

namespace {

struct Signature {
  int height, lower, upper;
  std::size_t down, up;
  auto operator<=>(const Signature&) const = default;
};

std::vector<Signature> signatures(const FiniteLattice& L) {
  std::vector<Signature> sig(L.size());
  for (Element x = 0; x < L.size(); ++x) {
    sig[x] = {L.height(x), static_cast<int>(L.lower_covers(x).size()),
              static_cast<int>(L.upper_covers(x).size()), L.down_sets().count(x),
              L.up_sets().count(x)};
  }
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(const FiniteLattice& a, const FiniteLattice& b)
      : a_(a), b_(b), sa_(signatures(a)), sb_(signatures(b)),
        map_(a.size(), -1), used_(b.size(), 0) {}

  bool run(Element x) {
    if (x == a_.size()) return true;
    for (Element y = 0; y < b_.size(); ++y) {
      if (used_[y] || sa_[x] != sb_[y] || !consistent(x, y)) continue;
      map_[x] = y;
      used_[y] = 1;
      if (run(x + 1)) return true;
      used_[y] = 0;
    }
    map_[x] = -1;
    return false;
  }

  std::vector<Element> mapping() const { return map_; }

 private:
  bool consistent(Element x, Element y) const {
    for (Element u = 0; u < x; ++u) {
      const Element v = map_[u];
      if (a_.leq(u, x) != b_.leq(v, y) || a_.leq(x, u) != b_.leq(y, v)) return false;
    }
    return true;
  }

  const FiniteLattice& a_;
  const FiniteLattice& b_;
  std::vector<Signature> sa_, sb_;
  std::vector<Element> map_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<Element>> is_isomorphic(const FiniteLattice& first,
                                                  const FiniteLattice& second) {
  if (first.size() != second.size() || first.covers().size() != second.covers().size())
    return std::nullopt;
  auto sa = signatures(first);
  auto sb = signatures(second);
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  IsoSearch search(first, second);
  if (!search.run(0)) return std::nullopt;
  return search.mapping();
}

}  // namespace pclat
