// Serial reference vs OpenMP kernels: point-group enumeration and commutants.
#include <benchmark/benchmark.h>

#include "lattisym/catalog.hpp"

using namespace lattisym;

namespace {

template <Scalar T>
const Lattice<T>& lattice(const char* name) {
  static const Lattice<T> fcc = case_lattice<T>(find_case("fcc-rhomboidal"));
  static const Lattice<T> hex = case_lattice<T>(find_case("hexagonal-prism"));
  return std::string_view(name) == "fcc-rhomboidal" ? fcc : hex;
}

template <Scalar T>
void BM_PointGroupSerial(benchmark::State& state, const char* name) {
  const auto& lat = lattice<T>(name);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_point_group_serial(lat).order());
}

template <Scalar T>
void BM_PointGroupParallel(benchmark::State& state, const char* name) {
  const auto& lat = lattice<T>(name);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_point_group(lat).order());
}

template <Scalar T>
void BM_CommutantSerial(benchmark::State& state, const char* name) {
  const auto group = enumerate_point_group(lattice<T>(name));
  for (auto _ : state) benchmark::DoNotOptimize(commutant_serial<T>(group.elements, Ambient::kFull36).dimension());
}

template <Scalar T>
void BM_CommutantParallel(benchmark::State& state, const char* name) {
  const auto group = enumerate_point_group(lattice<T>(name));
  for (auto _ : state) benchmark::DoNotOptimize(commutant<T>(group.elements, Ambient::kFull36).dimension());
}

}  // namespace

int main(int argc, char** argv) {
  const char* fcc = "fcc-rhomboidal";
  const char* hex = "hexagonal-prism";
  benchmark::RegisterBenchmark("PointGroup/serial/exact/fcc", BM_PointGroupSerial<FieldElement>, fcc);
  benchmark::RegisterBenchmark("PointGroup/parallel/exact/fcc", BM_PointGroupParallel<FieldElement>, fcc);
  benchmark::RegisterBenchmark("PointGroup/serial/numeric/fcc", BM_PointGroupSerial<double>, fcc);
  benchmark::RegisterBenchmark("PointGroup/parallel/numeric/fcc", BM_PointGroupParallel<double>, fcc);
  benchmark::RegisterBenchmark("Commutant/serial/exact/fcc", BM_CommutantSerial<FieldElement>, fcc);
  benchmark::RegisterBenchmark("Commutant/parallel/exact/fcc", BM_CommutantParallel<FieldElement>, fcc);
  benchmark::RegisterBenchmark("Commutant/serial/exact/hex", BM_CommutantSerial<FieldElement>, hex);
  benchmark::RegisterBenchmark("Commutant/parallel/exact/hex", BM_CommutantParallel<FieldElement>, hex);
  benchmark::RegisterBenchmark("Commutant/serial/numeric/fcc", BM_CommutantSerial<double>, fcc);
  benchmark::RegisterBenchmark("Commutant/parallel/numeric/fcc", BM_CommutantParallel<double>, fcc);
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
