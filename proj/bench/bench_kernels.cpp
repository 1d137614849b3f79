// Kernel benchmarks: every OpenMP kernel against its serial reference, plus
// the job-parallel corpus runner.  The pairs must compute identical results
// (the test suite enforces that); here we only time them.
//
//   bench_kernels [--benchmark_filter=...]
//
// The corpus benchmarks read the job directory named by CHERN_BENCH_CORPUS
// (default: ./corpus) and write their reports to a scratch directory.

#include <benchmark/benchmark.h>

#include <cstdlib>
#include <filesystem>
#include <random>
#include <sstream>

#include "chern/corpus.hpp"
#include "chern/hilbert_series.hpp"
#include "chern/linalg.hpp"
#include "chern/monomial.hpp"

namespace fs = std::filesystem;
using namespace chern;

namespace {

fp_matrix random_matrix(size_t n) {
    std::mt19937_64 rng(n * 7919 + 17);
    fp_matrix m = make_fp_matrix(n, n, 32003);
    for (auto& x : m.a) x = uint32_t(rng() % 32003);
    return m;
}

// a fixed batch of leading terms in three variables, dense enough that the
// standard-monomial count has real work to do at high degree
std::vector<monomial> bench_lts() {
    std::mt19937_64 rng(424243);
    std::vector<monomial> lts;
    for (int k = 0; k < 10; ++k) {
        std::vector<uint32_t> e(3, 0);
        int deg = 5 + int(rng() % 3);
        for (int d = 0; d < deg; ++d) ++e[rng() % 3];
        lts.emplace_back(e);
    }
    return lts;
}

std::string corpus_dir() {
    const char* env = std::getenv("CHERN_BENCH_CORPUS");
    return env ? env : "corpus";
}

} // namespace

static void BM_fp_rank_serial(benchmark::State& state) {
    fp_matrix m = random_matrix(size_t(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(fp_rank_serial(m));
}
BENCHMARK(BM_fp_rank_serial)->Arg(64)->Arg(128)->Arg(256)->Arg(512);

static void BM_fp_rank_omp(benchmark::State& state) {
    fp_matrix m = random_matrix(size_t(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(fp_rank_omp(m));
}
BENCHMARK(BM_fp_rank_omp)->Arg(64)->Arg(128)->Arg(256)->Arg(512);

static void BM_count_standard_serial(benchmark::State& state) {
    auto lts = bench_lts();
    for (auto _ : state)
        benchmark::DoNotOptimize(count_standard_serial(lts, 3, uint32_t(state.range(0))));
}
BENCHMARK(BM_count_standard_serial)->Arg(10)->Arg(16)->Arg(24);

static void BM_count_standard_omp(benchmark::State& state) {
    auto lts = bench_lts();
    for (auto _ : state)
        benchmark::DoNotOptimize(count_standard_omp(lts, 3, uint32_t(state.range(0))));
}
BENCHMARK(BM_count_standard_omp)->Arg(10)->Arg(16)->Arg(24);

// full-pipeline throughput: the whole bundled corpus, serial vs job-parallel
static void BM_corpus(benchmark::State& state) {
    std::string dir = corpus_dir();
    if (!fs::is_directory(dir)) {
        state.SkipWithError(("no corpus directory at " + dir).c_str());
        return;
    }
    fs::path scratch = fs::temp_directory_path() / "chern-bench-out";
    corpus_options opt;
    opt.jobs = int(state.range(0));
    opt.out_dir = scratch.string();
    for (auto _ : state) {
        std::ostringstream log;
        int rc = corpus_run(dir, opt, log);
        if (rc != 0) {
            state.SkipWithError("corpus run failed");
            break;
        }
    }
    fs::remove_all(scratch);
}
BENCHMARK(BM_corpus)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
