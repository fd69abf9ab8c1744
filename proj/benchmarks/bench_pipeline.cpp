/*
 *  Copyright 2026 The aspdbg Authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

#include <aspdbg/debugger.hpp>
#include <aspdbg/ground.hpp>
#include <aspdbg/parser.hpp>
#include <aspdbg/rewrite.hpp>
#include <aspdbg/solver.hpp>

#include <benchmark/benchmark.h>

#include <sstream>
#include <string>

namespace {

using namespace aspdbg;

// n members and n papers, with an explicit bid only for the first pair. The
// default rule makes every other pair loop through negation.
Program bidding(int n) {
    std::ostringstream s;
    for (int i = 1; i <= n; ++i) {
        s << "pc(m" << i << "). paper(p" << i << ").\n";
    }
    s << "bid(m1,p1,2).\n"
      << "some_bid(M,P) :- bid(M,P,X).\n"
      << "bid(M,P,1) :- not some_bid(M,P), pc(M), paper(P).\n";
    return parse_program(s.str(), "bidding.lp");
}

// Same shape with a choice instead of the odd loop, so answer sets exist.
Program choices(int n) {
    std::ostringstream s;
    for (int i = 1; i <= n; ++i) {
        s << "pc(m" << i << "). paper(p" << i << ").\n";
    }
    s << "bid(M,P,1) | skip(M,P) :- pc(M), paper(P).\n"
      << "busy(M) :- bid(M,P,1).\n"
      << ":- pc(M), not busy(M).\n";
    return parse_program(s.str(), "choices.lp");
}

void BM_Ground(benchmark::State& state) {
    auto d = build_debug_program(bidding(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ground(d.rewritten));
    }
}
BENCHMARK(BM_Ground)->Arg(4)->Arg(8)->Arg(16);

void BM_FirstAnswerSet(benchmark::State& state) {
    auto g = ground(choices(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate(g, {}, 1));
    }
}
BENCHMARK(BM_FirstAnswerSet)->Arg(4)->Arg(8)->Arg(16);

void BM_Incoherence(benchmark::State& state) {
    auto g = ground(bidding(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_coherent(g));
    }
}
BENCHMARK(BM_Incoherence)->Arg(4)->Arg(8)->Arg(16);

void BM_FirstCore(benchmark::State& state) {
    auto p = bidding(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Session s(p, {});
        benchmark::DoNotOptimize(s.step());
    }
}
BENCHMARK(BM_FirstCore)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
