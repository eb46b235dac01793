//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
// Serial reference versus OpenMP for the three parallel kernels. The second
// argument of every benchmark is the thread count; 0 selects the serial path.
//
#include "abdux/parser.hpp"
#include "abdux/reductions.hpp"
#include "abdux/search.hpp"
#include "abdux/semantics.hpp"

#include <benchmark/benchmark.h>

#include <string>

using namespace abdux;

namespace {

Exec exec_for(const benchmark::State& state) {
    auto jobs = static_cast<int>(state.range(1));
    return jobs == 0 ? Exec::serial() : Exec::parallel(jobs);
}

/// n independent even loops: 2^n stable models, 2n undetermined atoms.
GroundProgram choice_program(int n) {
    std::string text;
    for (int i = 0; i < n; ++i) {
        auto a = "a" + std::to_string(i), b = "b" + std::to_string(i);
        text += a + " :- not " + b + ".\n" + b + " :- not " + a + ".\n";
        text += "c :- " + a + ", " + (i ? "b" + std::to_string(i - 1) : std::string("a0")) + ".\n";
    }
    return ground(parse_theory(text).program());
}

void BM_stable_models(benchmark::State& state) {
    auto gp = choice_program(static_cast<int>(state.range(0)));
    auto exec = exec_for(state);
    for (auto _ : state) benchmark::DoNotOptimize(stable_models_bits(gp, {}, 24, exec));
}

void BM_explanation_batch(benchmark::State& state) {
    std::string text = "#abducible e/2.\n";
    for (int i = 0; i < state.range(0); ++i) text += "d(c" + std::to_string(i) + ").\n";
    text += "p(X) :- e(X,Y), d(Y), not q(Y).\nq(Y) :- e(Y,Y).\no :- p(X), p(Y), e(X,Y).\n";
    auto t = parse_theory(text);
    Observation o = parse_observation("o.");
    SearchOptions opts;
    opts.bounds = {2, 0, 0};
    opts.arbitrariness.semantics.exec = exec_for(state);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_explanations(t, o, AgreementType::D, opts));
}

void BM_qbf_oracle(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Qbf q;
    q.num_vars = 2 * n;
    for (int v = 1; v <= n; ++v) q.exists.push_back(v), q.forall.push_back(n + v);
    q.form = Qbf::Matrix::dnf;
    for (int v = 1; v <= n; ++v) q.matrix.push_back({v, -(n + v)});
    auto exec = exec_for(state);
    for (auto _ : state) benchmark::DoNotOptimize(qbf_bruteforce(q, exec));
}

} // namespace

BENCHMARK(BM_stable_models)->ArgsProduct({{6, 8}, {0, 1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_explanation_batch)->ArgsProduct({{6, 10}, {0, 1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_qbf_oracle)->ArgsProduct({{8, 10}, {0, 1, 2, 4}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
