#ifndef NCPARA_CONFIG_HPP
#define NCPARA_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ncpara/classifier.hpp"
#include "ncpara/miner.hpp"
#include "ncpara/model.hpp"

namespace ncpara {

struct RankingConfig {
  int k = 250;
  double prune_threshold = 0.025;
  double penalty_c = 1.0;
  int iterations = 1000;
};

struct ClassifyConfig {
  ClassifierConfig grid;
  std::string variant = "integrated";
  std::string split = "random";  // random | lexical
  SplitSpec split_spec() const;
  FeatureVariant feature_variant() const;
};

// The resolved configuration of one run: a single seed, all input/output
// paths, and every module's tunables. Loaded from a JSON document, overridden
// by CLI flags, and persisted next to each command's outputs.
struct RunConfig {
  std::uint64_t seed = 42;

  std::vector<std::string> corpus_shards;
  std::string compounds_path;
  std::string patterns_path;
  std::string embeddings_path;
  std::string training_set_path;
  std::string checkpoint_path;
  std::string predictions_path;
  std::string gold_path;
  std::string ranker_gold_path;
  std::string dataset_path;
  std::string output_path;

  MinerConfig miner;
  ModelConfig model;
  double val_fraction = 0.05;  // compounds held out for validation
  RankingConfig ranking;
  ClassifyConfig classify;

  nlohmann::json to_json() const;
  static RunConfig from_json(const nlohmann::json& j);  // defaults + overrides
  static RunConfig load(const std::string& path);

  // Applies a dotted-path override such as "model.dim=50" or
  // "miner.determiners=[\"a\",\"the\"]".
  void apply_override(const std::string& assignment);

  // Writes the resolved configuration to "<output>.config.json".
  void persist_next_to(const std::string& output) const;
};

}  // namespace ncpara

#endif
