#include <benchmark/benchmark.h>

#include "ckit/catalog.hpp"
#include "ckit/report.hpp"

namespace {

using namespace ckit;

void BM_psi_sn3(benchmark::State& state) {
  CatalogParams p;
  p.n = 3;
  CatalogEntry e = catalog_build("nakamura_s_n", p);
  for (auto _ : state)
    benchmark::DoNotOptimize(psi(e.algebra, e.structures[0].J));
}
BENCHMARK(BM_psi_sn3);

void BM_dsigma_dim14(benchmark::State& state) {
  CatalogParams p;
  p.n = 3;
  CatalogEntry e = catalog_build("nakamura_s_n", p);
  Coframe cf = adapted_coframe(e.algebra, e.structures[0].J);
  Form sigma = sigma_form(cf);
  for (auto _ : state) benchmark::DoNotOptimize(ce_d(e.algebra, sigma));
}
BENCHMARK(BM_dsigma_dim14);

void BM_decide_kodaira(benchmark::State& state) {
  CatalogEntry e = catalog_build("kodaira");
  for (auto _ : state)
    benchmark::DoNotOptimize(
        decide_invariant_trivial(e.algebra, e.structures[0].J));
}
BENCHMARK(BM_decide_kodaira);

void BM_certificate_sn(benchmark::State& state) {
  CatalogEntry e = catalog_build("nakamura_s_n");
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_certificate(e.certificates[0].cert));
}
BENCHMARK(BM_certificate_sn);

void BM_build_section_s644(benchmark::State& state) {
  CatalogEntry e = catalog_build("s_6_44");
  for (auto _ : state)
    benchmark::DoNotOptimize(build_section(e.algebra, e.structures[0].J));
}
BENCHMARK(BM_build_section_s644);

void BM_pipeline_ghat(benchmark::State& state) {
  CatalogEntry e = catalog_build("hypercomplex_ghat");
  PipelineInput in(e.algebra);
  in.J = e.structures[0].J;
  in.triple = e.triple;
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(in));
}
BENCHMARK(BM_pipeline_ghat);

}  // namespace

BENCHMARK_MAIN();
