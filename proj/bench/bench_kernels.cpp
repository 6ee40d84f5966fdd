// Parallel kernels against their serial references on a few lattice shapes.
//   bench_kernels --benchmark_filter=modular

#include <algorithm>
#include <numeric>

#include <benchmark/benchmark.h>

#include "pclat/abelian.hpp"
#include "pclat/generators.hpp"
#include "pclat/kernels.hpp"

using namespace pclat;
namespace k = pclat::kernels;

namespace {

// Shape index -> lattice. Kept static so construction is not timed.
const FiniteLattice& shape(int which) {
  static const FiniteLattice shapes[] = {
      random_lattice(400, 1),
      product(product(fixture("M23"), diamond(5)), chain(8)),
      divisor_lattice(720720),
      subgroup_lattice(AbelianGroupSpec{{2, 2, 2, 2, 4}}),
  };
  return shapes[which];
}

const char* shape_name(int which) {
  static const char* names[] = {"random400", "M23xM5xC8", "divisors720720", "Z2^4xZ4"};
  return names[which];
}

struct OwnedView {
  std::vector<Element> topo;
  std::vector<std::vector<Element>> lower, upper;
  std::vector<std::size_t> down_count, up_count;
  k::OrderView view;

  explicit OwnedView(const FiniteLattice& L) {
    const int n = L.size();
    for (Element x = 0; x < n; ++x) {
      lower.push_back(L.lower_covers(x));
      upper.push_back(L.upper_covers(x));
      down_count.push_back(L.down_sets().count(x));
      up_count.push_back(L.up_sets().count(x));
    }
    topo.resize(n);
    std::iota(topo.begin(), topo.end(), 0);
    std::stable_sort(topo.begin(), topo.end(), [&](Element a, Element b) { return down_count[a] < down_count[b]; });
    view = {n, &L.up_sets(), &L.down_sets(), topo, &lower, &upper, down_count, up_count};
  }
};

template <auto Fn>
void table(benchmark::State& state) {
  const auto& L = shape(static_cast<int>(state.range(0)));
  const OwnedView v(L);
  state.SetLabel(shape_name(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(v.view));
}

template <auto Fn>
void scan(benchmark::State& state) {
  const auto& L = shape(static_cast<int>(state.range(0)));
  state.SetLabel(shape_name(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(L));
}

void shapes(benchmark::internal::Benchmark* b) {
  for (int i = 0; i < 4; ++i) b->Arg(i);
  b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(table<k::parallel::meet_table>)->Name("meet_table/parallel")->Apply(shapes);
BENCHMARK(table<k::serial::meet_table>)->Name("meet_table/serial")->Apply(shapes);
BENCHMARK(table<k::parallel::join_table>)->Name("join_table/parallel")->Apply(shapes);
BENCHMARK(table<k::serial::join_table>)->Name("join_table/serial")->Apply(shapes);
BENCHMARK(scan<k::parallel::modular_violation>)->Name("modular/parallel")->Apply(shapes);
BENCHMARK(scan<k::serial::modular_violation>)->Name("modular/serial")->Apply(shapes);
BENCHMARK(scan<k::parallel::distributive_violation>)->Name("distributive/parallel")->Apply(shapes);
BENCHMARK(scan<k::serial::distributive_violation>)->Name("distributive/serial")->Apply(shapes);
BENCHMARK(scan<k::parallel::ternary_witness>)->Name("ternary/parallel")->Apply(shapes);
BENCHMARK(scan<k::serial::ternary_witness>)->Name("ternary/serial")->Apply(shapes);

BENCHMARK_MAIN();
