#include "ncpara/config.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "ncpara/errors.hpp"

namespace ncpara {

using nlohmann::json;

SplitSpec ClassifyConfig::split_spec() const {
  SplitSpec spec;
  if (split == "random") {
    spec.kind = SplitKind::Random;
  } else if (split == "lexical") {
    spec.kind = SplitKind::Lexical;
  } else {
    throw UsageError("unknown split kind: " + split);
  }
  return spec;
}

FeatureVariant ClassifyConfig::feature_variant() const {
  return variant_from_name(variant);
}

json RunConfig::to_json() const {
  return json{
      {"seed", seed},
      {"paths",
       {{"corpus", corpus_shards},
        {"compounds", compounds_path},
        {"patterns", patterns_path},
        {"embeddings", embeddings_path},
        {"training_set", training_set_path},
        {"checkpoint", checkpoint_path},
        {"predictions", predictions_path},
        {"gold", gold_path},
        {"ranker_gold", ranker_gold_path},
        {"dataset", dataset_path},
        {"output", output_path}}},
      {"miner",
       {{"min_count", miner.min_count},
        {"max_ngram_len", miner.max_ngram_len},
        {"min_ngram_len", miner.min_ngram_len},
        {"negative_ratio", miner.negative_ratio},
        {"negative_score", miner.negative_score},
        {"determiners", miner.determiners},
        {"max_tries", miner.max_tries},
        {"threads", miner.threads}}},
      {"model",
       {{"dim", model.dim},
        {"learning_rate", model.learning_rate},
        {"momentum", model.momentum},
        {"batch_size", model.batch_size},
        {"max_epochs", model.max_epochs},
        {"patience", model.patience},
        {"init_range", model.init_range},
        {"val_fraction", val_fraction}}},
      {"ranking",
       {{"k", ranking.k},
        {"prune_threshold", ranking.prune_threshold},
        {"penalty_c", ranking.penalty_c},
        {"iterations", ranking.iterations}}},
      {"classify",
       {{"variant", classify.variant},
        {"split", classify.split},
        {"k_grid", classify.grid.k_grid},
        {"penalty_grid", classify.grid.penalty_grid},
        {"iterations", classify.grid.iterations}}}};
}

namespace {

template <typename T>
void maybe(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

RunConfig RunConfig::from_json(const json& j) {
  RunConfig c;
  maybe(j, "seed", c.seed);
  if (j.contains("paths")) {
    const auto& p = j.at("paths");
    maybe(p, "corpus", c.corpus_shards);
    maybe(p, "compounds", c.compounds_path);
    maybe(p, "patterns", c.patterns_path);
    maybe(p, "embeddings", c.embeddings_path);
    maybe(p, "training_set", c.training_set_path);
    maybe(p, "checkpoint", c.checkpoint_path);
    maybe(p, "predictions", c.predictions_path);
    maybe(p, "gold", c.gold_path);
    maybe(p, "ranker_gold", c.ranker_gold_path);
    maybe(p, "dataset", c.dataset_path);
    maybe(p, "output", c.output_path);
  }
  if (j.contains("miner")) {
    const auto& m = j.at("miner");
    maybe(m, "min_count", c.miner.min_count);
    maybe(m, "max_ngram_len", c.miner.max_ngram_len);
    maybe(m, "min_ngram_len", c.miner.min_ngram_len);
    maybe(m, "negative_ratio", c.miner.negative_ratio);
    maybe(m, "negative_score", c.miner.negative_score);
    maybe(m, "determiners", c.miner.determiners);
    maybe(m, "max_tries", c.miner.max_tries);
    maybe(m, "threads", c.miner.threads);
  }
  if (j.contains("model")) {
    const auto& m = j.at("model");
    maybe(m, "dim", c.model.dim);
    maybe(m, "learning_rate", c.model.learning_rate);
    maybe(m, "momentum", c.model.momentum);
    maybe(m, "batch_size", c.model.batch_size);
    maybe(m, "max_epochs", c.model.max_epochs);
    maybe(m, "patience", c.model.patience);
    maybe(m, "init_range", c.model.init_range);
    maybe(m, "val_fraction", c.val_fraction);
  }
  if (j.contains("ranking")) {
    const auto& r = j.at("ranking");
    maybe(r, "k", c.ranking.k);
    maybe(r, "prune_threshold", c.ranking.prune_threshold);
    maybe(r, "penalty_c", c.ranking.penalty_c);
    maybe(r, "iterations", c.ranking.iterations);
  }
  if (j.contains("classify")) {
    const auto& cl = j.at("classify");
    maybe(cl, "variant", c.classify.variant);
    maybe(cl, "split", c.classify.split);
    maybe(cl, "k_grid", c.classify.grid.k_grid);
    maybe(cl, "penalty_grid", c.classify.grid.penalty_grid);
    maybe(cl, "iterations", c.classify.grid.iterations);
  }
  c.miner.seed = c.seed;
  c.model.seed = c.seed;
  return c;
}

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw DataError("bad config JSON in " + path + ": " + e.what());
  }
  return from_json(j);
}

void RunConfig::apply_override(const std::string& assignment) {
  std::size_t eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw UsageError("override must look like section.key=value: " + assignment);
  }
  std::string key = assignment.substr(0, eq);
  std::string value = assignment.substr(eq + 1);

  std::string pointer = "/";
  for (char c : key) pointer += (c == '.') ? '/' : c;

  json j = to_json();
  json parsed;
  try {
    parsed = json::parse(value);
  } catch (const json::parse_error&) {
    parsed = value;  // plain strings need no quoting
  }
  try {
    j[json::json_pointer(pointer)] = parsed;
  } catch (const json::exception& e) {
    throw UsageError("cannot apply override '" + assignment + "': " + e.what());
  }
  *this = from_json(j);
}

void RunConfig::persist_next_to(const std::string& output) const {
  std::string path = output + ".config.json";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write resolved config: " + path);
  out << to_json().dump(2) << '\n';
}

}  // namespace ncpara
