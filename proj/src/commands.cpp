#include "ncpara/commands.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>

#include <nlohmann/json.hpp>

#include "ncpara/errors.hpp"
#include "ncpara/io.hpp"
#include "ncpara/ranking.hpp"
#include "ncpara/rng.hpp"

namespace ncpara {

namespace {

void require_path(const std::string& path, const char* what) {
  if (path.empty()) {
    throw UsageError(std::string("missing required path: ") + what);
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write file: " + path);
  return out;
}

}  // namespace

MiningStats run_build_data(const RunConfig& config, std::ostream& out,
                           std::ostream& err) {
  if (config.corpus_shards.empty()) {
    throw UsageError("missing required path: corpus shards");
  }
  require_path(config.compounds_path, "compounds");
  require_path(config.patterns_path, "patterns");
  require_path(config.training_set_path, "training_set (output)");

  auto compounds = read_compounds(config.compounds_path);
  auto extraction = extract_pos_patterns(read_lines(config.patterns_path));
  if (extraction.skipped > 0) {
    err << "warning: skipped " << extraction.skipped
        << " malformed gold paraphrases during pattern extraction\n";
  }
  if (extraction.patterns.empty()) {
    throw DataError("no POS patterns extracted from " + config.patterns_path);
  }

  std::vector<std::vector<NGramRecord>> shards;
  shards.reserve(config.corpus_shards.size());
  for (const auto& path : config.corpus_shards) {
    shards.push_back(read_ngram_shard(path));
  }

  RuleBasedTagger tagger;
  Lemmatizer lemmatizer;
  auto result = mine_shards(shards, compounds, extraction.patterns, tagger,
                            lemmatizer, config.miner);

  write_training_set(config.training_set_path, result.instances);
  config.persist_next_to(config.training_set_path);

  out << "ngrams_read " << result.stats.ngrams_read << "\n";
  out << "positive_instances " << result.stats.positives << "\n";
  out << "negative_instances " << result.stats.negatives << "\n";
  out << "total_instances " << result.instances.size() << "\n";
  for (const auto& [length, count] : result.stats.bucket_sizes) {
    out << "bucket_length_" << length << " " << count << "\n";
  }
  return result.stats;
}

std::pair<std::vector<TrainingInstance>, std::vector<TrainingInstance>>
split_by_compound(const std::vector<TrainingInstance>& instances,
                  double val_fraction, std::uint64_t seed) {
  std::set<std::pair<std::string, std::string>> compound_set;
  for (const auto& instance : instances) {
    compound_set.insert({instance.w1, instance.w2});
  }
  std::vector<std::pair<std::string, std::string>> compounds(compound_set.begin(),
                                                             compound_set.end());
  if (compounds.size() < 2) {
    // Too small to hold anything out; validate on the training set itself.
    return {instances, instances};
  }
  Rng rng(seed);
  rng.shuffle(compounds);
  std::size_t n_val = round_half_up(val_fraction * static_cast<double>(compounds.size()));
  n_val = std::clamp<std::size_t>(n_val, 1, compounds.size() - 1);
  std::set<std::pair<std::string, std::string>> val_compounds(
      compounds.begin(), compounds.begin() + static_cast<std::ptrdiff_t>(n_val));

  std::vector<TrainingInstance> train, val;
  for (const auto& instance : instances) {
    if (val_compounds.count({instance.w1, instance.w2})) {
      val.push_back(instance);
    } else {
      train.push_back(instance);
    }
  }
  return {train, val};
}

TrainReport run_train(const RunConfig& config, std::ostream& err) {
  require_path(config.training_set_path, "training_set");
  require_path(config.embeddings_path, "embeddings");
  require_path(config.checkpoint_path, "checkpoint (output)");

  auto instances = read_training_set(config.training_set_path);
  if (instances.empty()) {
    throw DataError("training set is empty: " + config.training_set_path);
  }
  auto table = EmbeddingTable::load(config.embeddings_path);
  auto vocab = Vocabulary::build(table, instances);

  auto [train_set, val_set] =
      split_by_compound(instances, config.val_fraction, config.seed);
  err << "training on " << train_set.size() << " instances, validating on "
      << val_set.size() << "\n";

  Model model(std::move(vocab), table, config.model);
  auto report = model.train(train_set, val_set, &err);
  model.save(config.checkpoint_path);
  config.persist_next_to(config.checkpoint_path);
  return report;
}

void run_predict(const RunConfig& config, const PredictQuery& query,
                 std::ostream& out) {
  require_path(config.checkpoint_path, "checkpoint");
  Model model = Model::load(config.checkpoint_path);

  const bool has_w1 = !query.w1.empty();
  const bool has_w2 = !query.w2.empty();
  const bool has_template = !query.template_.empty();
  if (has_w1 + has_w2 + has_template != 2) {
    throw UsageError(
        "predict needs exactly two of --w1, --w2, --template; the missing one "
        "is predicted");
  }

  std::ostream* sink = &out;
  std::ofstream file;
  if (!config.output_path.empty()) {
    file = open_output(config.output_path);
    sink = &file;
  }

  auto emit_words = [&](const PredictionDistribution& dist) {
    int k = std::min(query.k, static_cast<int>(dist.probs.size()));
    for (const auto& [index, score] : argmax_k(dist.probs, k)) {
      (*sink) << model.vocab().word(index) << '\t' << format_double(score) << '\n';
    }
  };

  if (has_w1 && has_w2) {
    int k = std::min(query.k, model.vocab().template_count());
    auto dist = model.predict_paraphrase(lowercase(query.w1), lowercase(query.w2));
    for (const auto& [index, score] : argmax_k(dist.probs, k)) {
      (*sink) << model.vocab().template_at(index).render() << '\t'
              << format_double(score) << '\n';
    }
  } else if (has_w2 && has_template) {
    emit_words(model.predict_w1(lowercase(query.w2),
                                ParaphraseTemplate::parse(query.template_)));
  } else {
    emit_words(model.predict_w2(ParaphraseTemplate::parse(query.template_),
                                lowercase(query.w1)));
  }
  if (!config.output_path.empty()) {
    config.persist_next_to(config.output_path);
  }
}

void run_rerank(const RunConfig& config, std::ostream& err) {
  require_path(config.checkpoint_path, "checkpoint");
  require_path(config.compounds_path, "compounds");
  require_path(config.ranker_gold_path, "ranker_gold");
  require_path(config.predictions_path, "predictions (output)");

  Model model = Model::load(config.checkpoint_path);
  auto compounds = read_compounds(config.compounds_path);
  auto gold = read_ranked_lists(config.ranker_gold_path);
  RuleBasedTagger tagger;

  std::vector<PairwiseRanker::TrainingList> lists;
  for (const auto& [nc, entries] : gold) {
    PairwiseRanker::TrainingList list;
    Eigen::VectorXd compound_encoding = model.compound_slot_encoding(nc.w1, nc.w2);
    auto dist = model.predict_paraphrase(nc.w1, nc.w2);
    for (const auto& entry : entries) {
      auto tmpl = ParaphraseTemplate::try_parse(entry.paraphrase);
      if (!tmpl) {
        err << "warning: skipping unparseable gold paraphrase: "
            << entry.paraphrase << "\n";
        continue;
      }
      CandidateParaphrase candidate;
      candidate.tmpl = *tmpl;
      candidate.template_id = model.vocab().template_id(*tmpl);
      candidate.model_score =
          candidate.template_id >= 0 ? dist.probs[candidate.template_id] : 0.0;
      candidate.encoding = model.encode_template(*tmpl);
      list.features.push_back(
          featurize(candidate, compound_encoding, tagger).to_vector());
      list.gold_scores.push_back(entry.score);
    }
    if (list.features.size() >= 2) lists.push_back(std::move(list));
  }
  PairwiseRanker ranker =
      PairwiseRanker::train(lists, config.ranking.penalty_c, config.ranking.iterations);

  RankedListMap output;
  for (const auto& nc : compounds) {
    auto candidates = retrieve_candidates(nc, model, config.ranking.k, &err);
    featurize_candidates(candidates, nc, model, tagger);
    auto ranked = rerank_and_prune(std::move(candidates), ranker,
                                   config.ranking.prune_threshold);
    auto& entries = output[nc];
    for (const auto& item : ranked) {
      entries.push_back({item.tmpl.render(), item.final_score});
    }
  }
  write_ranked_lists(config.predictions_path, output);
  config.persist_next_to(config.predictions_path);
}

std::string score_report_json(const ScoreReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.per_compound) {
    rows.push_back({{"w1", row.compound.w1},
                    {"w2", row.compound.w2},
                    {"isomorphic", row.isomorphic},
                    {"non_isomorphic", row.non_isomorphic}});
  }
  return nlohmann::json{{"isomorphic", report.isomorphic},
                        {"non_isomorphic", report.non_isomorphic},
                        {"ignored_predictions", report.ignored_predictions},
                        {"per_compound", rows}}
      .dump(2);
}

ScoreReport run_score(const RunConfig& config, std::ostream& out,
                      std::ostream& err) {
  require_path(config.predictions_path, "predictions");
  require_path(config.gold_path, "gold");

  auto predictions = read_ranked_lists(config.predictions_path);
  auto gold = gold_lists_from_ranked(read_ranked_lists(config.gold_path));
  if (gold.empty()) throw DataError("gold file is empty: " + config.gold_path);

  auto report = score_system(predictions, gold, &err);
  std::string json_text = score_report_json(report);
  if (!config.output_path.empty()) {
    auto file = open_output(config.output_path);
    file << json_text << '\n';
    config.persist_next_to(config.output_path);
  } else {
    out << json_text << '\n';
  }
  return report;
}

std::string eval_report_json(const EvalReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.per_class) {
    rows.push_back({{"label", row.label},
                    {"precision", row.precision},
                    {"recall", row.recall},
                    {"f1", row.f1},
                    {"support", row.support}});
  }
  return nlohmann::json{{"weighted_f1", report.weighted_f1},
                        {"chosen_family", report.chosen_family},
                        {"chosen_k", report.chosen_k},
                        {"chosen_penalty", report.chosen_penalty},
                        {"warnings", report.warnings},
                        {"per_class", rows},
                        {"split",
                         {{"train", report.split.train},
                          {"test", report.split.test},
                          {"val", report.split.val},
                          {"discarded", report.split.discarded}}}}
      .dump(2);
}

EvalReport run_classify(const RunConfig& config, std::ostream& out,
                        std::ostream& err) {
  require_path(config.dataset_path, "dataset");
  require_path(config.embeddings_path, "embeddings");

  auto dataset = read_labeled_dataset(config.dataset_path);
  auto table = EmbeddingTable::load(config.embeddings_path);

  FeatureVariant variant = config.classify.feature_variant();
  std::optional<Model> model_storage;
  const Model* model = nullptr;
  if (variant != FeatureVariant::Distributional) {
    require_path(config.checkpoint_path, "checkpoint");
    model_storage.emplace(Model::load(config.checkpoint_path));
    model = &*model_storage;
  }

  auto report = train_and_evaluate(dataset, config.classify.split_spec(), variant,
                                   model, table, config.classify.grid, config.seed);
  for (const auto& warning : report.warnings) {
    err << "warning: " << warning << "\n";
  }

  std::string json_text = eval_report_json(report);
  if (!config.output_path.empty()) {
    auto file = open_output(config.output_path);
    file << json_text << '\n';
    config.persist_next_to(config.output_path);
  } else {
    out << json_text << '\n';
  }
  return report;
}

void run_export_encodings(const RunConfig& config, std::ostream& err) {
  require_path(config.checkpoint_path, "checkpoint");
  require_path(config.output_path, "output");

  Model model = Model::load(config.checkpoint_path);
  auto out = open_output(config.output_path);
  for (int i = 0; i < model.vocab().template_count(); ++i) {
    const auto& tmpl = model.vocab().template_at(i);
    Eigen::VectorXd encoding = model.encode_template(tmpl);
    out << tmpl.render();
    for (Eigen::Index j = 0; j < encoding.size(); ++j) {
      out << '\t' << format_double(encoding[j]);
    }
    out << '\n';
  }
  config.persist_next_to(config.output_path);
  err << "exported " << model.vocab().template_count() << " template encodings\n";
}

}  // namespace ncpara
