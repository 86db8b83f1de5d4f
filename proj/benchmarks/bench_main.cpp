#include <benchmark/benchmark.h>

#include <map>
#include <random>
#include <sstream>

#include "emojiprof/corpus.hpp"
#include "emojiprof/graph.hpp"
#include "emojiprof/model.hpp"
#include "emojiprof/segmenter.hpp"
#include "emojiprof/synthetic.hpp"

using namespace emojiprof;

namespace {

const EmojiLexicon& lexicon() {
  static const EmojiLexicon lex = load_emoji_lexicon_file(std::string(EMOJIPROF_BENCH_DATA_DIR) + "/emoji_lexicon.tsv");
  return lex;
}

const Corpus& planted_corpus(std::uint32_t users_per_gender) {
  static std::map<std::uint32_t, Corpus> cache;
  auto it = cache.find(users_per_gender);
  if (it == cache.end()) {
    PlantedSpec spec;
    spec.users_per_gender = users_per_gender;
    std::istringstream in(generate_synthetic(planted_config(lexicon(), spec)));
    it = cache.emplace(users_per_gender, ingest(in).corpus).first;
  }
  return it->second;
}

void BM_Tokenize(benchmark::State& state) {
  const auto& corpus = planted_corpus(100);
  std::size_t bytes = 0;
  for (const auto& m : corpus.messages) bytes += m.text.size();
  for (auto _ : state) {
    std::size_t tokens = 0;
    for (const auto& m : corpus.messages) tokens += tokenize(m.text, lexicon()).size();
    benchmark::DoNotOptimize(tokens);
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * bytes));
}
BENCHMARK(BM_Tokenize)->Unit(benchmark::kMillisecond);

void BM_Aggregate(benchmark::State& state) {
  const auto& corpus = planted_corpus(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    auto users = aggregate(corpus, lexicon(), lexicon().policy());
    benchmark::DoNotOptimize(users.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * corpus.messages.size()));
}
BENCHMARK(BM_Aggregate)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_Synthesize(benchmark::State& state) {
  PlantedSpec spec;
  spec.users_per_gender = static_cast<std::uint32_t>(state.range(0));
  const auto cfg = planted_config(lexicon(), spec);
  for (auto _ : state) benchmark::DoNotOptimize(generate_synthetic(cfg).size());
}
BENCHMARK(BM_Synthesize)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_GbcFit(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> normal;
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix x(n, 40);
  std::vector<int> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < 40; ++j) x(i, j) = normal(rng);
    y[i] = x(i, 0) * x(i, 1) + x(i, 2) + normal(rng) > 0 ? 1 : 0;
  }
  for (auto _ : state) {
    auto m = train_gbc(x, y, {.n_trees = 50, .max_depth = 3, .learning_rate = 0.1, .min_leaf = 1});
    benchmark::DoNotOptimize(m.ensemble.trees.size());
  }
}
BENCHMARK(BM_GbcFit)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_Louvain(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto n = static_cast<std::uint32_t>(state.range(0));
  WeightedGraph g{n, {}};
  for (std::uint32_t u = 0; u < n; ++u) {
    for (int k = 0; k < 5; ++k) {
      const auto v = static_cast<std::uint32_t>(rng() % n);
      if (v != u) g.edges.push_back({std::min(u, v), std::max(u, v), 0.1 + (rng() % 100) / 20.0});
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(louvain(g, 0.2, 7).modularity);
}
BENCHMARK(BM_Louvain)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
