#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "cdlat/kernels.hpp"
#include "cdlat/spec.hpp"
#include "cdlat/subgroup.hpp"

namespace {

const std::vector<std::string> kGroups{"D128", "S4 x C2", "Jp(3,3)", "Ab(2,2,2,2,2,2)", "S3 x D10", "Jp(5,3)"};

const cdlat::Group& group_at(std::size_t i) {
  static std::vector<cdlat::Group> groups = [] {
    std::vector<cdlat::Group> out;
    for (const auto& s : kGroups) out.push_back(cdlat::build(cdlat::parse_spec(s)));
    return out;
  }();
  return groups.at(i);
}

template <bool Parallel>
void BM_Enumerate(benchmark::State& state) {
  const cdlat::Group& g = group_at(static_cast<std::size_t>(state.range(0)));
  const auto seeds = cdlat::kernels::cyclic_seed_generators(g);
  std::size_t count = 0;
  for (auto _ : state) {
    auto r = Parallel ? cdlat::kernels::enumerate_subgroups_omp(g, seeds, cdlat::kDefaultSubgroupCap)
                      : cdlat::kernels::enumerate_subgroups_serial(g, seeds, cdlat::kDefaultSubgroupCap);
    count = r.subgroups.size();
    benchmark::DoNotOptimize(r);
  }
  state.SetLabel(g.label() + " (" + std::to_string(count) + " subgroups)");
}

template <bool Parallel>
void BM_Centralizers(benchmark::State& state) {
  const cdlat::Group& g = group_at(static_cast<std::size_t>(state.range(0)));
  cdlat::EnumerationOptions opts;
  opts.policy = cdlat::ExecPolicy::serial;
  const auto lattice = cdlat::all_subgroups(g, opts);
  std::vector<cdlat::Bitset> members;
  for (const auto& h : lattice.subgroups) members.push_back(h.members);
  for (auto _ : state) {
    auto r = Parallel ? cdlat::kernels::centralizer_orders_omp(g, members)
                      : cdlat::kernels::centralizer_orders_serial(g, members);
    benchmark::DoNotOptimize(r);
  }
  state.SetLabel(g.label());
}

void group_args(benchmark::internal::Benchmark* b) {
  for (std::size_t i = 0; i < kGroups.size(); ++i) b->Arg(static_cast<std::int64_t>(i));
  b->Unit(benchmark::kMillisecond);
}

BENCHMARK_TEMPLATE(BM_Enumerate, false)->Name("enumerate/serial")->Apply(group_args);
BENCHMARK_TEMPLATE(BM_Enumerate, true)->Name("enumerate/omp")->Apply(group_args);
BENCHMARK_TEMPLATE(BM_Centralizers, false)->Name("centralizers/serial")->Apply(group_args);
BENCHMARK_TEMPLATE(BM_Centralizers, true)->Name("centralizers/omp")->Apply(group_args);

}  // namespace

BENCHMARK_MAIN();
