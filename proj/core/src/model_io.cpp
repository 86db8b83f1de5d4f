#include <istream>
#include <iterator>
#include <ostream>

#include "emojiprof/error.hpp"
#include "emojiprof/model.hpp"
#include "json.hpp"

namespace emojiprof {

using nlohmann::ordered_json;

std::string save_model(const TrainedModel& m) {
  ordered_json j;
  j["version"] = kModelFormatVersion;
  j["kind"] = to_string(m.kind);
  j["manifest_fingerprint"] = m.manifest_fingerprint;
  j["n_features"] = m.n_features;
  j["seed"] = m.seed;
  ordered_json params;
  if (const auto* r = std::get_if<RidgeHyper>(&m.hyper)) {
    j["hyper"] = {{"lambda", r->lambda}};
  } else {
    const auto& g = std::get<GbcHyper>(m.hyper);
    j["hyper"] = {{"n_trees", g.n_trees}, {"max_depth", g.max_depth}, {"learning_rate", g.learning_rate},
                  {"min_leaf", g.min_leaf}};
  }
  if (m.kind == ModelKind::GradientBoostedTrees) {
    params["base_score"] = m.ensemble.base_score;
    ordered_json trees = ordered_json::array();
    for (const auto& t : m.ensemble.trees) {
      ordered_json nodes = ordered_json::array();
      for (const auto& n : t.nodes) nodes.push_back({n.feature, n.threshold, n.left, n.right, n.value});
      trees.push_back({{"weight", t.weight}, {"nodes", nodes}});
    }
    params["trees"] = std::move(trees);
  } else {
    params["bias"] = m.linear.bias;
    params["weights"] = m.linear.weights;
  }
  j["params"] = std::move(params);
  return j.dump() + "\n";
}

void save_model(const TrainedModel& model, std::ostream& out) { out << save_model(model); }

TrainedModel load_model(std::string_view text) {
  const auto j = ordered_json::parse(text.begin(), text.end(), nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw FormatError("model file is not valid JSON");
  TrainedModel m;
  try {
    const int version = j.at("version").get<int>();
    if (version != kModelFormatVersion) {
      throw FormatError("unsupported model version " + std::to_string(version));
    }
    m.kind = model_kind_from_string(j.at("kind").get<std::string>());
    m.manifest_fingerprint = j.at("manifest_fingerprint").get<std::string>();
    m.n_features = j.at("n_features").get<std::size_t>();
    m.seed = j.at("seed").get<std::uint64_t>();
    const auto& hyper = j.at("hyper");
    const auto& params = j.at("params");
    if (m.kind == ModelKind::GradientBoostedTrees) {
      GbcHyper g;
      g.n_trees = hyper.at("n_trees").get<std::uint32_t>();
      g.max_depth = hyper.at("max_depth").get<std::uint32_t>();
      g.learning_rate = hyper.at("learning_rate").get<double>();
      g.min_leaf = hyper.at("min_leaf").get<std::uint32_t>();
      m.hyper = g;
      m.ensemble.base_score = params.at("base_score").get<double>();
      for (const auto& jt : params.at("trees")) {
        Tree t;
        t.weight = jt.at("weight").get<double>();
        for (const auto& jn : jt.at("nodes")) {
          if (!jn.is_array() || jn.size() != 5) throw FormatError("tree node must have 5 fields");
          t.nodes.push_back({jn[0].get<std::int32_t>(), jn[1].get<double>(), jn[2].get<std::int32_t>(),
                             jn[3].get<std::int32_t>(), jn[4].get<double>()});
        }
        const auto count = static_cast<std::int32_t>(t.nodes.size());
        if (count == 0) throw FormatError("empty tree");
        for (std::int32_t k = 0; k < count; ++k) {
          const auto& n = t.nodes[static_cast<std::size_t>(k)];
          if (n.feature < 0) continue;
          // Children always follow their parent, which also rules out cycles.
          if (static_cast<std::size_t>(n.feature) >= m.n_features || n.left <= k || n.right <= k ||
              n.left >= count || n.right >= count) {
            throw FormatError("tree node refers outside the tree or feature range");
          }
        }
        m.ensemble.trees.push_back(std::move(t));
      }
    } else {
      m.hyper = RidgeHyper{hyper.at("lambda").get<double>()};
      m.linear.bias = params.at("bias").get<double>();
      m.linear.weights = params.at("weights").get<std::vector<double>>();
      if (m.linear.weights.size() != m.n_features) throw FormatError("weight count does not match n_features");
    }
  } catch (const ordered_json::exception& e) {
    throw FormatError(std::string("malformed model file: ") + e.what());
  } catch (const ArgumentError& e) {
    throw FormatError(std::string("malformed model file: ") + e.what());
  }
  return m;
}

TrainedModel load_model(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("failed reading model");
  return load_model(text);
}

}  // namespace emojiprof
