// emojiprof: emoji-usage analytics and emoji-only gender inference.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "emojiprof/corpus.hpp"
#include "emojiprof/error.hpp"
#include "emojiprof/evaluation.hpp"
#include "emojiprof/features.hpp"
#include "emojiprof/graph.hpp"
#include "emojiprof/hash.hpp"
#include "emojiprof/lexicon.hpp"
#include "emojiprof/model.hpp"
#include "emojiprof/report.hpp"
#include "emojiprof/sentiment.hpp"
#include "emojiprof/stats.hpp"
#include "emojiprof/synthetic.hpp"
#include "emojiprof/text_baseline.hpp"
#include "json.hpp"
#include "output_dir.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace emojiprof::cli {
namespace {

constexpr std::uint64_t kDefaultSeed = 2018;

fs::path data_dir() {
  if (const char* env = std::getenv("EMOJIPROF_DATA_DIR"); env && *env) return env;
  if (fs::exists(fs::path(EMOJIPROF_SOURCE_DATA_DIR) / "emoji_lexicon.tsv")) return EMOJIPROF_SOURCE_DATA_DIR;
  return EMOJIPROF_INSTALL_DATA_DIR;
}

struct Globals {
  std::string lexicon;
  std::string sentiment_lexicon;
  std::string policy;
  std::uint64_t seed = kDefaultSeed;
  bool seed_given = false;
  std::string out;
  unsigned threads = 1;

  std::optional<NormalizationPolicy> override_policy;

  void resolve() {
    if (!policy.empty()) {
      const auto eq = policy.find('=');
      const auto key = policy.substr(0, eq);
      const auto value = eq == std::string::npos ? std::string() : policy.substr(eq + 1);
      if (key != "fold-skin-tones" || (value != "true" && value != "false")) {
        throw ArgumentError("--policy expects fold-skin-tones=<true|false>");
      }
      NormalizationPolicy p;
      p.fold_skin_tones = value == "true";
      override_policy = p;
    }
    if (lexicon.empty()) {
      const bool fold = !override_policy || override_policy->fold_skin_tones;
      lexicon = (data_dir() / (fold ? "emoji_lexicon.tsv" : "emoji_lexicon_full.tsv")).string();
    }
    if (sentiment_lexicon.empty()) sentiment_lexicon = (data_dir() / "sentiment_lexicon.tsv").string();
    if (out.empty()) throw ArgumentError("--out is required");
    if (threads == 0) threads = 1;
  }

  ordered_json echo() const {
    ordered_json j;
    j["lexicon"] = lexicon;
    j["sentiment_lexicon"] = sentiment_lexicon;
    j["policy"] = policy.empty() ? "default" : policy;
    j["seed"] = seed;
    j["out"] = out;
    j["threads"] = threads;
    return j;
  }
};

struct Loaded {
  EmojiLexicon lexicon;
  SentimentLexicon words;
  std::vector<SentimentLabel> labels;
};

Loaded load_lexicons(const Globals& g) {
  Loaded l{load_emoji_lexicon_file(g.lexicon, g.override_policy), load_sentiment_lexicon_file(g.sentiment_lexicon),
           {}};
  l.labels = label_lexicon(l.lexicon, l.words);
  return l;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_run_json(OutputDir& out, const std::string& command, const Globals& g, ordered_json options,
                    const EmojiLexicon* lexicon) {
  ordered_json j;
  j["command"] = command;
  j["globals"] = g.echo();
  if (lexicon) {
    j["normalization_policy"] = lexicon->policy().describe();
    j["lexicon_fingerprint"] = lexicon->fingerprint();
    j["lexicon_size"] = lexicon->size();
  }
  j["options"] = std::move(options);
  out.write("run.json", j.dump(2) + "\n");
}

struct CorpusInput {
  std::string path;
  std::optional<std::int64_t> from;
  std::optional<std::int64_t> to;
};

Corpus read_corpus(const CorpusInput& in) {
  if (in.path.empty()) throw ArgumentError("--corpus is required");
  auto result = ingest_file(in.path);
  if (result.report.rejected > 0) {
    std::cerr << "emojiprof: skipped " << result.report.rejected << " of " << result.report.lines
              << " corpus lines\n";
    for (const auto& [line, reason] : result.report.sample_rejections) {
      std::cerr << "  line " << line << ": " << reason << '\n';
    }
  }
  if (in.from || in.to) return filter_time_window(result.corpus, in.from, in.to);
  return std::move(result.corpus);
}

ordered_json corpus_echo(const CorpusInput& in) {
  ordered_json j;
  j["corpus"] = in.path;
  j["from"] = in.from ? ordered_json(*in.from) : ordered_json(nullptr);
  j["to"] = in.to ? ordered_json(*in.to) : ordered_json(nullptr);
  return j;
}

std::vector<UserAggregate> gendered_users(const Corpus& corpus, const Loaded& l, const Globals& g) {
  auto users = labeled_only(aggregate(corpus, l.lexicon, l.lexicon.policy(), {g.threads}));
  if (users.empty()) throw UndefinedError("no gendered users in the corpus");
  return users;
}

// ---- synth ----

struct SynthOptions {
  std::string config;
  bool planted = false;
  std::uint32_t users_per_gender = PlantedSpec{}.users_per_gender;
};

void cmd_synth(const Globals& g, const SynthOptions& o) {
  SyntheticConfig config;
  ordered_json echo;
  if (!o.config.empty()) {
    config = SyntheticConfig::from_json(read_file(o.config));
    echo["config"] = o.config;
  } else if (o.planted) {
    const auto lexicon = load_emoji_lexicon_file(g.lexicon, g.override_policy);
    PlantedSpec spec;
    spec.users_per_gender = o.users_per_gender;
    config = planted_config(lexicon, spec);
    echo["planted"] = true;
    echo["users_per_gender"] = o.users_per_gender;
  } else {
    throw ArgumentError("synth needs --config FILE or --planted");
  }
  if (g.seed_given) config.seed = g.seed;
  config.validate();
  echo["resolved_config"] = ordered_json::parse(config.to_json());

  OutputDir out(g.out);
  const std::string corpus = generate_synthetic(config);
  out.write("corpus.jsonl", corpus);
  write_run_json(out, "synth", g, std::move(echo), nullptr);
  out.commit();
  std::cout << sha256_hex(corpus) << "  " << out.file("corpus.jsonl").string() << '\n';
}

// ---- analyze ----

struct AnalyzeOptions {
  CorpusInput corpus;
  std::optional<double> male_threshold;
  std::vector<std::string> groups{"face", "heart"};
  std::size_t top = 20;
};

void cmd_analyze(const Globals& g, const AnalyzeOptions& o) {
  const auto l = load_lexicons(g);
  const auto users = gendered_users(read_corpus(o.corpus), l, g);

  std::vector<double> all, female, male;
  std::uint64_t n_female = 0, n_male = 0;
  for (const auto& u : users) {
    if (u.msg_count == 0) continue;
    const double f = emoji_msg_fraction(u);
    all.push_back(f);
    if (*u.gender == Gender::Female) {
      female.push_back(f);
      ++n_female;
    } else {
      male.push_back(f);
      ++n_male;
    }
  }
  std::vector<NamedCdf> cdfs{{"all", empirical_cdf(all)}};
  if (!female.empty()) cdfs.push_back({"F", empirical_cdf(female)});
  if (!male.empty()) cdfs.push_back({"M", empirical_cdf(male)});

  auto popularity = popularity_stat(users);
  const auto rows = rank_discriminative(users, l.lexicon, o.male_threshold);

  std::vector<SentimentClass> classes{SentimentClass::positive(), SentimentClass::negative()};
  for (const auto& grp : o.groups) classes.push_back(SentimentClass::named_group(grp));
  const auto sentiment = sentiment_usage_stats(users, l.lexicon, l.labels, classes);

  std::ostringstream top;
  top << "gender,rank,emoji,sequence,count,share\n";
  for (auto gender : {Gender::Female, Gender::Male}) {
    std::uint64_t tokens = 0;
    for (const auto& u : users) tokens += u.gender == gender ? u.emoji_token_count() : 0;
    if (tokens == 0) continue;
    std::size_t rank = 0;
    for (const auto& s : top_emojis(users, gender, l.lexicon, o.top)) {
      const auto& seq = l.lexicon.sequence(s.emoji);
      top << to_string(gender) << ',' << ++rank << ',' << csv_field(seq.to_utf8()) << ',' << seq.to_hex() << ','
          << s.count << ',' << ordered_json(s.share).dump() << '\n';
    }
  }

  ordered_json echo = corpus_echo(o.corpus);
  echo["male_threshold"] = o.male_threshold ? ordered_json(*o.male_threshold) : ordered_json("male user share");
  echo["groups"] = o.groups;
  echo["top"] = o.top;

  OutputDir out(g.out);
  const auto policy = l.lexicon.policy().describe();
  out.write("cdf.csv", cdf_csv(cdfs));
  out.write("popularity.json", popularity_json(popularity, n_female, n_male, policy));
  out.write("discriminative.csv", discriminative_csv(rows, l.lexicon));
  out.write("sentiment.json", split_stats_json(sentiment, policy));
  out.write("top_emojis.csv", top.str());
  write_run_json(out, "analyze", g, std::move(echo), &l.lexicon);
  out.commit();
}

// ---- graph ----

struct GraphOptions {
  CorpusInput corpus;
  std::string gender = "F";
  std::uint32_t k = 5;
  double resolution = 0.2;
};

void cmd_graph(const Globals& g, const GraphOptions& o) {
  std::optional<Gender> gender;
  if (o.gender == "F") gender = Gender::Female;
  else if (o.gender == "M") gender = Gender::Male;
  else if (o.gender != "all") throw ArgumentError("--gender expects F, M or all");

  const auto l = load_lexicons(g);
  const auto corpus = read_corpus(o.corpus);
  auto users = aggregate(corpus, l.lexicon, l.lexicon.policy(), {g.threads});
  if (gender) {
    users = labeled_only(users);
    if (users.empty()) throw UndefinedError("no gendered users in the corpus");
  }
  const auto counts = message_cooccurrence(users, gender);
  if (counts.marginal.size() < 2) throw UndefinedError("co-occurrence graph needs at least two distinct emojis");
  const auto graph = build_cooccurrence_graph(counts, l.lexicon, o.k);
  const auto communities = louvain(graph.graph(), o.resolution, g.seed);

  ordered_json echo = corpus_echo(o.corpus);
  echo["gender"] = o.gender;
  echo["k"] = o.k;
  echo["resolution"] = o.resolution;

  ordered_json summary;
  summary["nodes"] = graph.nodes.size();
  summary["edges"] = graph.edges.size();
  summary["communities"] = communities.n_communities;
  summary["modularity"] = communities.modularity;
  summary["resolution"] = o.resolution;

  OutputDir out(g.out);
  out.write("edges.csv", edges_csv(graph, l.lexicon));
  out.write("communities.csv", communities_csv(graph, communities, l.lexicon));
  out.write("graph.json", summary.dump(2) + "\n");
  write_run_json(out, "graph", g, std::move(echo), &l.lexicon);
  out.commit();
}

// ---- features ----

struct FeaturesOptions {
  CorpusInput corpus;
  std::string kind = "emoji";
  std::uint64_t min_emoji_msgs = 100;
  std::optional<std::uint64_t> max_emoji_msgs;
  std::size_t min_df = 2;
};

void cmd_features(const Globals& g, const FeaturesOptions& o) {
  if (o.kind != "emoji" && o.kind != "unigram") throw ArgumentError("--kind expects emoji or unigram");
  const auto l = load_lexicons(g);
  const auto corpus = read_corpus(o.corpus);
  const auto users =
      filter_by_emoji_msgs(gendered_users(corpus, l, g), o.min_emoji_msgs, o.max_emoji_msgs);
  if (users.empty()) throw UndefinedError("no gendered users pass the emoji-message filter");
  const auto matrix = o.kind == "emoji" ? feature_matrix(users, l.lexicon, l.labels)
                                        : unigram_text_features(corpus, users, l.lexicon, {o.min_df});

  ordered_json echo = corpus_echo(o.corpus);
  echo["kind"] = o.kind;
  echo["min_emoji_msgs"] = o.min_emoji_msgs;
  echo["max_emoji_msgs"] = o.max_emoji_msgs ? ordered_json(*o.max_emoji_msgs) : ordered_json(nullptr);
  echo["min_df"] = o.min_df;

  std::ostringstream csv;
  write_matrix_csv(matrix, csv);
  OutputDir out(g.out);
  out.write("features.csv", csv.str());
  out.write("manifest.json", matrix.manifest.to_json() + "\n");
  write_run_json(out, "features", g, std::move(echo), &l.lexicon);
  out.commit();
}

LabeledMatrix load_feature_dir(const fs::path& dir) {
  return load_features(dir / "features.csv", dir / "manifest.json");
}

// ---- train ----

struct TrainOptions {
  std::string features;
  std::string kind = "gbc";
  std::uint32_t cv = 5;
  std::string grid = "default";
  double train_fraction = 0.8;
  RidgeHyper ridge;
  GbcHyper gbc;
};

ordered_json hyper_json(const Hyper& h) {
  ordered_json j;
  if (const auto* r = std::get_if<RidgeHyper>(&h)) {
    j["lambda"] = r->lambda;
  } else {
    const auto& b = std::get<GbcHyper>(h);
    j["n_trees"] = b.n_trees;
    j["max_depth"] = b.max_depth;
    j["learning_rate"] = b.learning_rate;
    j["min_leaf"] = b.min_leaf;
  }
  return j;
}

void cmd_train(const Globals& g, const TrainOptions& o) {
  if (o.features.empty()) throw ArgumentError("--features is required");
  const auto kind = model_kind_from_string(o.kind);
  if (kind == ModelKind::UnigramLinear) throw ArgumentError("--kind expects gbc or ridge");
  if (o.grid != "default" && o.grid != "none") throw ArgumentError("--grid expects default or none");
  const auto data = load_feature_dir(o.features);
  const bool unigram = data.manifest.kind == "unigram";
  if (unigram && kind != ModelKind::RidgeLinear) throw ArgumentError("unigram features train with --kind ridge");

  const auto split = split_indices(data.rows(), o.train_fraction, g.seed);
  const auto train_set = data.select_rows(split.train);

  Hyper hyper = kind == ModelKind::RidgeLinear ? Hyper{o.ridge} : Hyper{o.gbc};
  ordered_json cv_json = nullptr;
  if (o.cv > 0 && o.grid == "default") {
    const auto grid = default_grid(kind);
    const auto cv = cross_validate(train_set.x, train_set.y, o.cv, grid, g.seed);
    hyper = cv.best();
    cv_json = ordered_json::object();
    cv_json["folds"] = o.cv;
    auto points = ordered_json::array();
    for (std::size_t p = 0; p < grid.size(); ++p) {
      points.push_back({{"hyper", hyper_json(grid[p])}, {"mean_accuracy", cv.mean_accuracy[p]},
                        {"fold_accuracy", cv.fold_accuracy[p]}});
    }
    cv_json["grid"] = std::move(points);
    cv_json["chosen"] = cv.chosen;
  }
  auto model = train(train_set.x, train_set.y, hyper);
  if (unigram) model.kind = ModelKind::UnigramLinear;
  model.manifest_fingerprint = data.manifest.fingerprint();
  model.seed = g.seed;

  ordered_json split_json;
  split_json["train_fraction"] = o.train_fraction;
  split_json["seed"] = g.seed;
  split_json["manifest_fingerprint"] = data.manifest.fingerprint();
  ordered_json train_ids = ordered_json::array(), test_ids = ordered_json::array();
  for (auto i : split.train) train_ids.push_back(data.row_ids[i]);
  for (auto i : split.test) test_ids.push_back(data.row_ids[i]);
  split_json["train"] = std::move(train_ids);
  split_json["test"] = std::move(test_ids);

  ordered_json echo;
  echo["features"] = o.features;
  echo["kind"] = o.kind;
  echo["cv"] = o.cv;
  echo["grid"] = o.grid;
  echo["train_fraction"] = o.train_fraction;
  echo["hyper"] = hyper_json(hyper);

  OutputDir out(g.out);
  out.write("model.json", save_model(model));
  out.write("split.json", split_json.dump(1) + "\n");
  if (!cv_json.is_null()) out.write("cv.json", cv_json.dump(2) + "\n");
  write_run_json(out, "train", g, std::move(echo), nullptr);
  out.commit();
}

// ---- eval ----

struct EvalOptions {
  std::string features;
  std::string model;
  std::string split;
  std::string buckets;
};

std::vector<std::pair<std::uint64_t, std::uint64_t>> parse_buckets(const std::string& spec) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument(item);
      std::size_t used = 0;
      const auto lo = std::stoull(item.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument(item);
      const auto hi_text = item.substr(colon + 1);
      const auto hi = std::stoull(hi_text, &used);
      if (used != hi_text.size() || hi <= lo) throw std::invalid_argument(item);
      out.emplace_back(lo, hi);
    } catch (const std::logic_error&) {
      throw ArgumentError("bad bucket '" + item + "'; expected LO:HI with LO < HI");
    }
  }
  if (out.empty()) throw ArgumentError("--buckets is empty");
  return out;
}

void cmd_eval(const Globals& g, const EvalOptions& o) {
  if (o.features.empty() || o.model.empty()) throw ArgumentError("eval needs --features and --model");
  auto data = load_feature_dir(o.features);
  std::ifstream model_in(o.model, std::ios::binary);
  if (!model_in) throw IoError("cannot open " + o.model);
  const auto model = load_model(model_in);
  if (model.manifest_fingerprint != data.manifest.fingerprint()) {
    throw ConsistencyError("model was trained on features with a different manifest fingerprint");
  }

  ordered_json echo;
  echo["features"] = o.features;
  echo["model"] = o.model;
  echo["split"] = o.split;
  echo["buckets"] = o.buckets;

  if (!o.split.empty()) {
    const auto j = ordered_json::parse(read_file(o.split), nullptr, false);
    if (j.is_discarded() || !j.contains("test")) throw FormatError("split file is malformed");
    if (j.value("manifest_fingerprint", std::string()) != data.manifest.fingerprint()) {
      throw ConsistencyError("split was made for features with a different manifest fingerprint");
    }
    std::set<std::string> test;
    for (const auto& id : j.at("test")) test.insert(id.get<std::string>());
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < data.rows(); ++i) {
      if (test.contains(data.row_ids[i])) rows.push_back(i);
    }
    if (rows.size() != test.size()) throw ConsistencyError("split names users missing from the feature matrix");
    data = data.select_rows(rows);
  }

  auto metrics_for = [&](const LabeledMatrix& part, const std::string& label) -> std::string {
    if (part.rows() == 0) {
      ordered_json j;
      j["label"] = label;
      j["n"] = 0;
      j["note"] = "no users in this bucket";
      return j.dump(2) + "\n";
    }
    const auto pred = predict(model, part.x);
    return metrics_json(evaluate(pred.labels, part.y), majority_baseline(part.y), label);
  };

  OutputDir out(g.out);
  if (o.buckets.empty()) {
    out.write("metrics.json", metrics_for(data, "test"));
  } else {
    for (const auto& [lo, hi] : parse_buckets(o.buckets)) {
      const auto label = std::to_string(lo) + ":" + std::to_string(hi);
      out.write("metrics_" + std::to_string(lo) + "_" + std::to_string(hi) + ".json",
                metrics_for(data.bucket(lo, hi), label));
    }
  }
  write_run_json(out, "eval", g, std::move(echo), nullptr);
  out.commit();
}

int run(int argc, char** argv) {
  CLI::App app{"Emoji-usage analytics and emoji-based gender inference"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--lexicon", g.lexicon, "Emoji lexicon TSV (default: bundled)");
  app.add_option("--sentiment-lexicon", g.sentiment_lexicon, "Sentiment word list TSV (default: bundled)");
  app.add_option("--policy", g.policy, "Normalization override, e.g. fold-skin-tones=false");
  auto* seed_opt = app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--out", g.out, "Output directory");
  app.add_option("--threads", g.threads, "Aggregation threads");

  auto add_corpus = [](CLI::App* sub, CorpusInput& c) {
    sub->add_option("--corpus", c.path, "Input JSONL corpus")->required();
    sub->add_option("--from", c.from, "Keep messages with timestamp >= FROM");
    sub->add_option("--to", c.to, "Keep messages with timestamp < TO");
  };

  SynthOptions synth;
  auto* s = app.add_subcommand("synth", "Generate a synthetic corpus");
  s->add_option("--config", synth.config, "Generator config JSON");
  s->add_flag("--planted", synth.planted, "Use the built-in planted-signal configuration");
  s->add_option("--users-per-gender", synth.users_per_gender, "Planted corpus size");

  AnalyzeOptions analyze;
  auto* a = app.add_subcommand("analyze", "Popularity, discriminative emojis and sentiment statistics");
  add_corpus(a, analyze.corpus);
  a->add_option("--male-threshold", analyze.male_threshold, "p(Male|e) threshold (default: male user share)");
  a->add_option("--groups", analyze.groups, "Lexicon groups compared as usage classes")->delimiter(',');
  a->add_option("--top", analyze.top, "Entries per gender in top_emojis.csv");

  GraphOptions graph;
  auto* gr = app.add_subcommand("graph", "PMI co-occurrence graph and communities");
  add_corpus(gr, graph.corpus);
  gr->add_option("--gender", graph.gender, "F, M or all");
  gr->add_option("-k,--k", graph.k, "Neighbors kept per emoji");
  gr->add_option("--resolution", graph.resolution, "Modularity resolution");

  FeaturesOptions features;
  auto* f = app.add_subcommand("features", "Per-user feature matrix");
  add_corpus(f, features.corpus);
  f->add_option("--kind", features.kind, "emoji or unigram");
  f->add_option("--min-emoji-msgs", features.min_emoji_msgs, "Minimum emoji messages per user");
  f->add_option("--max-emoji-msgs", features.max_emoji_msgs, "Exclusive upper bound on emoji messages");
  f->add_option("--min-df", features.min_df, "Unigram document-frequency cutoff");

  TrainOptions train;
  auto* t = app.add_subcommand("train", "Train a classifier on a feature directory");
  t->add_option("--features", train.features, "Directory written by `features`")->required();
  t->add_option("--kind", train.kind, "gbc or ridge");
  t->add_option("--cv", train.cv, "Cross-validation folds (0 disables the search)");
  t->add_option("--grid", train.grid, "default or none");
  t->add_option("--train-fraction", train.train_fraction, "Share of users used for training");
  t->add_option("--lambda", train.ridge.lambda, "Ridge penalty without CV");
  t->add_option("--n-trees", train.gbc.n_trees, "Boosting stages without CV");
  t->add_option("--max-depth", train.gbc.max_depth, "Tree depth without CV");
  t->add_option("--learning-rate", train.gbc.learning_rate, "Shrinkage without CV");
  t->add_option("--min-leaf", train.gbc.min_leaf, "Minimum rows per leaf");

  EvalOptions eval;
  auto* e = app.add_subcommand("eval", "Evaluate a model against the majority baseline");
  e->add_option("--features", eval.features, "Directory written by `features`")->required();
  e->add_option("--model", eval.model, "model.json written by `train`")->required();
  e->add_option("--split", eval.split, "split.json; evaluates its test users");
  e->add_option("--buckets", eval.buckets, "Emoji-message buckets, e.g. 80:100,60:80");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : exit_code_for(ErrorCategory::Usage);
  }

  try {
    g.seed_given = seed_opt->count() > 0;
    g.resolve();
    if (s->parsed()) cmd_synth(g, synth);
    else if (a->parsed()) cmd_analyze(g, analyze);
    else if (gr->parsed()) cmd_graph(g, graph);
    else if (f->parsed()) cmd_features(g, features);
    else if (t->parsed()) cmd_train(g, train);
    else if (e->parsed()) cmd_eval(g, eval);
  } catch (const Error& err) {
    std::cerr << "emojiprof: " << err.what() << '\n';
    return exit_code_for(err.category());
  } catch (const nlohmann::json::exception& err) {
    std::cerr << "emojiprof: " << err.what() << '\n';
    return exit_code_for(ErrorCategory::Data);
  } catch (const std::exception& err) {
    std::cerr << "emojiprof: " << err.what() << '\n';
    return exit_code_for(ErrorCategory::Data);
  }
  return 0;
}

}  // namespace
}  // namespace emojiprof::cli

int main(int argc, char** argv) { return emojiprof::cli::run(argc, argv); }
