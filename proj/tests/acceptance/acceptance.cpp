// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit code 0 iff all pass.
//
// Usage: acceptance <fixtures-dir>

#include <chrono>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ncpara/classifier.hpp"
#include "ncpara/commands.hpp"
#include "ncpara/config.hpp"
#include "ncpara/io.hpp"
#include "ncpara/miner.hpp"
#include "ncpara/model.hpp"
#include "ncpara/ranking.hpp"
#include "ncpara/scorer.hpp"
#include "../oracles.hpp"
#include "../support.hpp"

using namespace ncpara;
using ncpara::testing::tmpl;

namespace {

struct CriterionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool condition, const std::string& message) {
  if (!condition) throw CriterionFailure(message);
}

class Harness {
 public:
  void run(const std::string& name, double time_limit_seconds,
           const std::function<std::string()>& body) {
    auto start = std::chrono::steady_clock::now();
    try {
      std::string note = body();
      double elapsed = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();
      if (time_limit_seconds > 0 && elapsed > time_limit_seconds) {
        ++failures_;
        std::cout << "[FAIL] " << name << ": took " << elapsed
                  << "s, limit " << time_limit_seconds << "s\n";
        return;
      }
      std::cout << "[PASS] " << name;
      if (!note.empty()) std::cout << " -- " << note;
      std::cout << " (" << elapsed << "s)\n";
    } catch (const std::exception& e) {
      ++failures_;
      std::cout << "[FAIL] " << name << ": " << e.what() << "\n";
    }
  }

  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

std::string g_fixtures;
std::filesystem::path g_tmp;

// ---------------------------------------------------------------------------
// 1. Mining oracle: cmd_build_data on the fixture corpus reproduces the
//    hand-derived golden file byte for byte.
std::string mining_oracle() {
  RunConfig config;
  config.seed = 7;
  config.corpus_shards = {g_fixtures + "/mining/corpus.tsv"};
  config.compounds_path = g_fixtures + "/mining/compounds.tsv";
  config.patterns_path = g_fixtures + "/mining/patterns.txt";
  config.training_set_path = (g_tmp / "training_set.tsv").string();

  std::ostringstream stats_a, stats_b, err;
  run_build_data(config, stats_a, err);
  std::string first = testing::slurp(config.training_set_path);
  std::string golden =
      testing::slurp(g_fixtures + "/mining/golden_training_set.tsv");
  expect(!golden.empty(), "golden file missing");
  expect(first == golden, "output does not match the golden training set");

  // Determinism: a rerun is byte-identical.
  run_build_data(config, stats_b, err);
  expect(testing::slurp(config.training_set_path) == first,
         "rerun changed the output bytes");

  // Per-bucket score sums and the min_count drop rule.
  auto instances = read_training_set(config.training_set_path);
  std::map<std::size_t, double> sums;
  for (const auto& instance : instances) {
    sums[instance.tmpl.size()] += instance.score;
    expect(!(instance.w2 == "meeting" && instance.w1 == "morning" &&
             instance.tmpl.render() == "[w2] of [w1]"),
           "a tuple with summed frequency 4 survived min_count=5");
  }
  expect(sums.size() == 2, "expected two template-length buckets");
  for (const auto& [length, sum] : sums) {
    expect(std::abs(sum - 1.0) <= 1e-9,
           "bucket " + std::to_string(length) + " scores sum to " +
               format_double(sum));
  }
  return std::to_string(instances.size()) + " instances, buckets sum to 1";
}

// ---------------------------------------------------------------------------
// 2. Gradient check on a d=4 toy model: analytic vs central finite
//    differences within 1e-4 relative error over all learned parameters.
std::string gradient_check() {
  std::vector<std::string> words = {"cake", "apple", "oil",    "olive",
                                    "wall", "stone", "system"};  // +<unk> = 8
  std::vector<TrainingInstance> instances = {
      {"cake", tmpl("[w2] made of [w1]"), "apple", 0.7},
      {"oil", tmpl("[w2] of [w1]"), "olive", 0.4},
      {"wall", tmpl("[w2] near [w1]"), "stone", 0.9},
      {"system", tmpl("[w2] is unrelated to [w1]"), "quince", 0.3},  // <unk> w1
  };
  auto model = testing::make_model(words, instances, 4, 1234);
  expect(model.vocab().word_count() == 8, "|V_w| should be 8");
  expect(model.vocab().template_count() == 4, "|V_p| should be 4");

  Gradients grads = model.zero_gradients();
  for (const auto& instance : instances) {
    model.accumulate_gradients(instance, grads);
  }
  auto grad_views = Model::views_of(grads);
  auto param_views = model.learned_parameters();

  auto total_loss = [&]() {
    double sum = 0.0;
    for (const auto& instance : instances) sum += model.loss(instance);
    return sum;
  };

  const double h = 1e-5;
  std::size_t checked = 0;
  double worst = 0.0;
  for (std::size_t p = 0; p < param_views.size(); ++p) {
    for (std::ptrdiff_t i = 0; i < param_views[p].size; ++i) {
      double saved = param_views[p].data[i];
      param_views[p].data[i] = saved + h;
      double plus = total_loss();
      param_views[p].data[i] = saved - h;
      double minus = total_loss();
      param_views[p].data[i] = saved;
      double numeric = (plus - minus) / (2.0 * h);
      double analytic = grad_views[p].data[i];
      double rel = std::abs(numeric - analytic) /
                   std::max({std::abs(numeric), std::abs(analytic), 1e-4});
      worst = std::max(worst, rel);
      expect(rel < 1e-4, param_views[p].name + "[" + std::to_string(i) +
                             "]: relative error " + format_double(rel));
      ++checked;
    }
  }
  return std::to_string(checked) + " parameters, worst relative error " +
         format_double(worst);
}

// ---------------------------------------------------------------------------
// 3. Distribution validity across 100 random parameter settings.
std::string distribution_validity() {
  std::vector<std::string> words = {"cake", "apple", "oil", "olive", "wall",
                                    "stone"};
  std::vector<TrainingInstance> instances = {
      {"cake", tmpl("[w2] made of [w1]"), "apple", 0.5},
      {"oil", tmpl("[w2] of [w1]"), "olive", 0.5},
      {"wall", tmpl("[w2] near [w1]"), "stone", 0.5},
  };
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto model = testing::make_model(words, instances, 5, seed);
    auto p = model.predict_paraphrase("apple", "cake");
    auto w1 = model.predict_w1("cake", tmpl("[w2] made of [w1]"));
    auto w2 = model.predict_w2(tmpl("[w2] of [w1]"), "olive");
    for (const auto* dist : {&p, &w1, &w2}) {
      expect(dist->probs.minCoeff() >= 0.0, "negative probability");
      expect(std::abs(dist->probs.sum() - 1.0) <= 1e-6,
             "probabilities sum to " + format_double(dist->probs.sum()));
    }
  }
  return "100 seeds x 3 heads";
}

// ---------------------------------------------------------------------------
// Shared fixture for criteria 4 and 5: 20 compounds over 10 templates.
struct MemorizationFixture {
  std::vector<std::string> words;
  std::vector<TrainingInstance> instances;
};

MemorizationFixture memorization_fixture() {
  MemorizationFixture fixture;
  std::vector<std::string> preps = {"of", "in", "on", "for", "with",
                                    "from", "to", "near", "at", "by"};
  for (int i = 0; i < 20; ++i) {
    std::string mod = "mod" + std::to_string(i);
    std::string head = "head" + std::to_string(i);
    fixture.words.push_back(mod);
    fixture.words.push_back(head);
    fixture.instances.push_back(
        {head, tmpl("[w2] " + preps[i % 10] + " [w1]"), mod, 1.0});
  }
  return fixture;
}

// 4. Fixed-embedding invariant after a full training run.
std::string fixed_embedding_invariant() {
  auto fixture = memorization_fixture();
  auto table = testing::random_table(fixture.words, 24, 911);
  auto vocab = Vocabulary::build(table, fixture.instances);
  ModelConfig config;
  config.dim = 24;
  config.seed = 911;
  config.learning_rate = 0.3;
  Model model(std::move(vocab), table, config);
  Eigen::MatrixXd before = model.fixed_embeddings();
  model.train(fixture.instances, fixture.instances);
  const Eigen::MatrixXd& after = model.fixed_embeddings();
  expect(before.rows() == after.rows() && before.cols() == after.cols(),
         "embedding matrix changed shape");
  expect(std::memcmp(before.data(), after.data(),
                     sizeof(double) * before.size()) == 0,
         "pre-trained embedding bytes changed during training");
  return std::to_string(before.cols()) + " columns bit-identical";
}

// 5. Memorization: >= 90% top-1 paraphrase accuracy on the training
//    compounds within 10 epochs.
std::string memorization() {
  auto fixture = memorization_fixture();
  auto table = testing::random_table(fixture.words, 24, 911);
  auto vocab = Vocabulary::build(table, fixture.instances);
  ModelConfig config;
  config.dim = 24;
  config.seed = 911;
  config.learning_rate = 0.3;
  Model model(std::move(vocab), table, config);
  model.train(fixture.instances, fixture.instances);

  int correct = 0;
  for (const auto& instance : fixture.instances) {
    auto dist = model.predict_paraphrase(instance.w1, instance.w2);
    int best = argmax_k(dist.probs, 1)[0].first;
    if (model.vocab().template_at(best) == instance.tmpl) ++correct;
  }
  double accuracy = correct / 20.0;
  expect(accuracy >= 0.9, "top-1 accuracy " + format_double(accuracy));
  return "top-1 accuracy " + std::to_string(correct) + "/20";
}

// ---------------------------------------------------------------------------
// 6. Generalization smoke test: a held-out compound sharing a training head
//    ranks that head's template in the top 3 while the retrieval baseline
//    returns nothing.
std::string generalization_smoke() {
  std::vector<std::string> mods = {"welfare", "pension", "housing",
                                   "insurance", "health", "benefit"};
  std::vector<std::string> words = mods;
  for (const char* w : {"system", "cake", "apple", "oil", "olive", "wall",
                        "stone", "meeting", "morning", "subsidy", "of", "made",
                        "from", "near", "held", "in"}) {
    words.push_back(w);
  }

  ParaphraseTemplate shared = tmpl("[w2] of [w1]");
  std::vector<TrainingInstance> instances;
  for (const auto& mod : mods) {
    instances.push_back({"system", shared, mod, 1.0});
  }
  instances.push_back({"cake", tmpl("[w2] made of [w1]"), "apple", 1.0});
  instances.push_back({"oil", tmpl("[w2] from [w1]"), "olive", 1.0});
  instances.push_back({"wall", tmpl("[w2] near [w1]"), "stone", 1.0});
  instances.push_back({"meeting", tmpl("[w2] held in [w1]"), "morning", 1.0});

  // The held-out modifier is embedded near a training modifier.
  auto base = testing::random_table(words, 16, 404);
  std::vector<std::pair<std::string, Eigen::VectorXd>> pairs;
  for (const auto& word : words) {
    if (word == "subsidy") continue;
    pairs.emplace_back(word, base.vector_of(*base.find(word)));
  }
  Eigen::VectorXd near_welfare = base.vector_of(*base.find("welfare"));
  near_welfare[0] += 0.01;
  pairs.emplace_back("subsidy", near_welfare);
  auto table = EmbeddingTable::from_pairs(16, pairs);

  auto vocab = Vocabulary::build(table, instances);
  ModelConfig config;
  config.dim = 16;
  config.seed = 404;
  config.learning_rate = 0.3;
  Model model(std::move(vocab), table, config);
  model.train(instances, instances);

  NounCompound held_out{"subsidy", "system"};
  expect(baseline_retrieve(held_out, instances).empty(),
         "the baseline should retrieve nothing for an unseen compound");

  auto dist = model.predict_paraphrase(held_out.w1, held_out.w2);
  auto top = argmax_k(dist.probs, 3);
  bool found = false;
  for (const auto& [index, score] : top) {
    if (model.vocab().template_at(index) == shared) found = true;
  }
  expect(found, "\"[w2] of [w1]\" not in the top 3 for the held-out compound");
  return "held-out compound generalizes, baseline empty";
}

// ---------------------------------------------------------------------------
// 7. Ranker recovery: Kendall tau >= 0.9 on held-out lists whose gold order
//    is a linear function of the five features.
std::string ranker_recovery() {
  Rng rng(2024);
  const int dim = RankFeatures::dimension();
  Eigen::VectorXd truth(dim);
  for (int i = 0; i < dim; ++i) truth[i] = rng.uniform(-1.0, 1.0);

  auto random_features = [&]() {
    RankFeatures f;
    f.pos_counts.assign(kPosCount, 0);
    f.prep_counts.assign(RuleBasedTagger::prepositions().size(), 0);
    for (int i = 0; i < 2; ++i) {
      ++f.pos_counts[rng.index(kPosCount)];
      ++f.prep_counts[rng.index(f.prep_counts.size())];
    }
    f.n_words = 3 + static_cast<int>(rng.index(3));
    f.ends_with_w1 = rng.uniform() < 0.5;
    f.guided_score = rng.uniform();
    return f;
  };

  auto random_list = [&]() {
    PairwiseRanker::TrainingList list;
    for (int i = 0; i < 8; ++i) {
      Eigen::VectorXd x = random_features().to_vector();
      list.features.push_back(x);
      list.gold_scores.push_back(truth.dot(x));
    }
    return list;
  };

  std::vector<PairwiseRanker::TrainingList> train_lists;
  for (int i = 0; i < 30; ++i) train_lists.push_back(random_list());
  auto ranker = PairwiseRanker::train(train_lists, 10.0, 3000);

  double tau_sum = 0.0;
  const int held_out = 10;
  for (int list_index = 0; list_index < held_out; ++list_index) {
    auto list = random_list();
    int concordant = 0, discordant = 0;
    for (std::size_t a = 0; a < list.features.size(); ++a) {
      for (std::size_t b = a + 1; b < list.features.size(); ++b) {
        bool gold = list.gold_scores[a] > list.gold_scores[b];
        bool pred = ranker.score(list.features[a]) > ranker.score(list.features[b]);
        if (gold == pred) {
          ++concordant;
        } else {
          ++discordant;
        }
      }
    }
    tau_sum += static_cast<double>(concordant - discordant) /
               static_cast<double>(concordant + discordant);
  }
  double tau = tau_sum / held_out;
  expect(tau >= 0.9, "mean Kendall tau " + format_double(tau));
  return "mean Kendall tau " + format_double(tau);
}

// ---------------------------------------------------------------------------
// 8. Scorer oracle: isomorphic list_match equals the brute-force optimal
//    alignment over 1,000 randomized cases.
std::string scorer_oracle() {
  Rng rng(515);
  std::vector<std::string> pool = {"cake",    "cakes",    "apple",
                                   "apples",  "made",     "holding",
                                   "hold",    "holdings", "of",
                                   "in",      "with",     "system",
                                   "systems", "mutation", "mutations"};
  auto random_phrase = [&]() {
    std::size_t len = 1 + rng.index(4);
    std::string out;
    for (std::size_t i = 0; i < len; ++i) {
      if (i) out += ' ';
      out += pool[rng.index(pool.size())];
    }
    return out;
  };

  for (int trial = 0; trial < 1000; ++trial) {
    GoldList gold;
    gold.compound = {"apple", "cake"};
    std::size_t gold_len = 1 + rng.index(5);
    for (std::size_t j = 0; j < gold_len; ++j) {
      gold.entries.push_back({random_phrase(), 1.0 + rng.index(5)});
    }
    std::vector<std::string> pred;
    std::size_t pred_len = rng.index(6);
    for (std::size_t i = 0; i < pred_len; ++i) pred.push_back(random_phrase());

    double fast = list_match(pred, gold, MatchMode::Isomorphic);
    double slow = testing::brute_force_isomorphic(pred, gold);
    expect(std::abs(fast - slow) <= 1e-9,
           "disagreement " + format_double(fast) + " vs " + format_double(slow));
    expect(fast >= 0.0 && fast <= 1.0 + 1e-12, "score out of [0,1]");
  }

  GoldList gold;
  gold.compound = {"apple", "cake"};
  gold.entries = {{"cake made of apples", 3.0}, {"cake of apples", 1.0}};
  std::vector<std::string> identical = {"cake made of apples", "cake of apples"};
  expect(list_match(identical, gold, MatchMode::Isomorphic) == 1.0,
         "identical lists should score exactly 1.0");
  std::vector<std::string> disjoint = {"zz qq", "xx yy"};
  expect(list_match(disjoint, gold, MatchMode::Isomorphic) == 0.0,
         "disjoint lists should score exactly 0.0");
  return "1000 randomized cases match the oracle";
}

// ---------------------------------------------------------------------------
// 9. Paraphrase-vector oracle: the confidence-weighted mean equals a direct
//    recomputation, with convex-hull and scale-invariance properties.
std::string eq3_oracle() {
  std::vector<std::string> words = {"cake", "apple", "oil", "olive", "wall",
                                    "stone", "meeting", "morning", "system",
                                    "welfare"};
  std::vector<TrainingInstance> instances = {
      {"cake", tmpl("[w2] made of [w1]"), "apple", 0.5},
      {"oil", tmpl("[w2] of [w1]"), "olive", 0.4},
      {"wall", tmpl("[w2] near [w1]"), "stone", 0.3},
      {"meeting", tmpl("[w2] held in [w1]"), "morning", 0.2},
      {"system", tmpl("[w2] is unrelated to [w1]"), "welfare", 0.1},
      {"cake", tmpl("[w2] from [w1]"), "apple", 0.15},
  };
  auto model = testing::make_model(words, instances, 8, 880);

  Rng rng(7717);
  for (int trial = 0; trial < 100; ++trial) {
    NounCompound nc{words[rng.index(words.size())],
                    words[rng.index(words.size())]};
    int k = 1 + static_cast<int>(rng.index(6));
    Eigen::VectorXd got = paraphrase_vector(nc, model, k);

    auto dist = model.predict_paraphrase(nc.w1, nc.w2);
    auto top = argmax_k(dist.probs, std::min(k, model.vocab().template_count()));
    Eigen::VectorXd sum = Eigen::VectorXd::Zero(model.output_dim());
    double total = 0.0;
    double coeff_sum = 0.0;
    for (const auto& [index, confidence] : top) {
      expect(confidence >= 0.0, "negative confidence");
      sum += confidence * model.encode_template(model.vocab().template_at(index));
      total += confidence;
    }
    expect((got - sum / total).norm() <= 1e-6,
           "weighted mean deviates by " +
               format_double((got - sum / total).norm()));
    for (const auto& [index, confidence] : top) coeff_sum += confidence / total;
    expect(std::abs(coeff_sum - 1.0) <= 1e-9, "convex weights do not sum to 1");

    // Scale invariance of the weights.
    Eigen::VectorXd scaled_sum = Eigen::VectorXd::Zero(model.output_dim());
    double scaled_total = 0.0;
    for (const auto& [index, confidence] : top) {
      scaled_sum += 41.0 * confidence *
                    model.encode_template(model.vocab().template_at(index));
      scaled_total += 41.0 * confidence;
    }
    expect((got - scaled_sum / scaled_total).norm() <= 1e-9,
           "scaling the confidences moved the vector");
  }
  return "100 compound/k draws match the recomputation";
}

// ---------------------------------------------------------------------------
// 10. Lexical split: pairwise-disjoint constituent vocabularies for 20 seeds,
//     discard counts reported.
std::string lexical_split() {
  Rng rng(31337);
  std::vector<LabeledCompound> dataset;
  for (int i = 0; i < 200; ++i) {
    dataset.push_back({"m" + std::to_string(rng.index(20)),
                       "h" + std::to_string(rng.index(20)),
                       "label" + std::to_string(rng.index(4))});
  }
  SplitSpec spec;
  spec.kind = SplitKind::Lexical;
  spec.train_ratio = 0.6;
  spec.test_ratio = 0.25;
  spec.val_ratio = 0.15;

  int min_discard = 1 << 30, max_discard = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto split = make_split(dataset, spec, seed);
    auto vocab_of = [&](const std::vector<int>& idx) {
      std::set<std::string> vocab;
      for (int i : idx) {
        vocab.insert(dataset[i].w1);
        vocab.insert(dataset[i].w2);
      }
      return vocab;
    };
    auto train = vocab_of(split.train);
    auto test = vocab_of(split.test);
    auto val = vocab_of(split.val);
    for (const auto& word : test) {
      expect(!train.count(word),
             "seed " + std::to_string(seed) + ": train/test share " + word);
    }
    for (const auto& word : val) {
      expect(!train.count(word) && !test.count(word),
             "seed " + std::to_string(seed) + ": val shares " + word);
    }
    expect(split.train.size() + split.test.size() + split.val.size() +
               split.discarded ==
               dataset.size(),
           "discard accounting is off");
    min_discard = std::min(min_discard, split.discarded);
    max_discard = std::max(max_discard, split.discarded);
  }
  return "20 seeds disjoint; discards " + std::to_string(min_discard) + ".." +
         std::to_string(max_discard) + " of 200";
}

// ---------------------------------------------------------------------------
// 11. Toy classification: with labels determined by the generating template,
//     integrated >= paraphrase and >= 0.95 weighted F1 on the random split.
std::string toy_classification() {
  std::vector<std::string> heads;
  std::vector<std::string> mods;
  for (int i = 0; i < 6; ++i) heads.push_back("head" + std::to_string(i));
  for (int i = 0; i < 10; ++i) mods.push_back("mod" + std::to_string(i));

  std::vector<ParaphraseTemplate> label_templates = {
      tmpl("[w2] made of [w1]"), tmpl("[w2] held in [w1]"),
      tmpl("[w2] of [w1]")};
  std::vector<std::string> labels = {"material", "time", "topic"};

  std::vector<std::string> words = heads;
  words.insert(words.end(), mods.begin(), mods.end());
  // Template content words need pre-trained vectors, as they would have in a
  // real embedding table; otherwise every template interior encodes as <unk>.
  for (const char* w : {"made", "of", "held", "in"}) words.push_back(w);

  std::vector<TrainingInstance> instances;
  std::vector<LabeledCompound> dataset;
  for (std::size_t h = 0; h < heads.size(); ++h) {
    int group = static_cast<int>(h) % 3;
    for (const auto& mod : mods) {
      instances.push_back({heads[h], label_templates[group], mod, 1.0});
      dataset.push_back({mod, heads[h], labels[group]});
    }
  }

  auto table = testing::random_table(words, 16, 606);
  auto vocab = Vocabulary::build(table, instances);
  ModelConfig config;
  config.dim = 16;
  config.seed = 606;
  config.learning_rate = 0.1;
  Model model(std::move(vocab), table, config);
  model.train(instances, instances);

  ClassifierConfig grid;
  SplitSpec spec;  // random 75:20:5
  auto paraphrase_report = train_and_evaluate(
      dataset, spec, FeatureVariant::Paraphrase, &model, table, grid, 99);
  auto integrated_report = train_and_evaluate(
      dataset, spec, FeatureVariant::Integrated, &model, table, grid, 99);

  expect(integrated_report.weighted_f1 >= paraphrase_report.weighted_f1 - 1e-12,
         "integrated " + format_double(integrated_report.weighted_f1) +
             " < paraphrase " + format_double(paraphrase_report.weighted_f1));
  expect(integrated_report.weighted_f1 >= 0.95,
         "integrated weighted F1 " +
             format_double(integrated_report.weighted_f1));
  return "paraphrase F1 " + format_double(paraphrase_report.weighted_f1) +
         ", integrated F1 " + format_double(integrated_report.weighted_f1);
}

// ---------------------------------------------------------------------------
// 12. Configuration fidelity: the published constants are the defaults.
std::string config_fidelity() {
  RunConfig config;
  expect(config.model.dim == 100, "dim default");
  expect(config.miner.min_ngram_len == 3 && config.miner.max_ngram_len == 5,
         "n-gram length defaults");
  expect(config.miner.min_count == 5, "min_count default");
  expect(config.miner.negative_ratio == 0.01, "negative ratio default");
  expect(config.model.batch_size == 10, "batch size default");
  expect(config.model.max_epochs == 10, "max epochs default");
  expect(config.model.patience == 3, "patience default");
  expect(config.ranking.k == 250, "retrieval k default");
  expect(config.ranking.prune_threshold == 0.025, "prune threshold default");
  return "d=100, n=3..5, min_count=5, 1% negatives, batch=10, epochs=10, "
         "patience=3, k=250, threshold=0.025";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <fixtures-dir>\n";
    return 2;
  }
  g_fixtures = argv[1];
  g_tmp = std::filesystem::temp_directory_path() / "ncpara_acceptance";
  std::filesystem::remove_all(g_tmp);
  std::filesystem::create_directories(g_tmp);

  Harness harness;
  harness.run("mining oracle: golden training set, byte-identical", 5.0,
              mining_oracle);
  harness.run("gradient check: analytic vs finite differences (1e-4)", 30.0,
              gradient_check);
  harness.run("distribution validity: 100 random parameter settings (1e-6)",
              0.0, distribution_validity);
  harness.run("fixed-embedding invariant: bit-identical after training", 0.0,
              fixed_embedding_invariant);
  harness.run("memorization: >= 90% top-1 on 20 compounds in 10 epochs", 120.0,
              memorization);
  harness.run("generalization: held-out compound in top-3, baseline empty",
              0.0, generalization_smoke);
  harness.run("ranker recovery: Kendall tau >= 0.9 on held-out lists", 0.0,
              ranker_recovery);
  harness.run("scorer oracle: brute-force alignment agreement, 1000 cases",
              0.0, scorer_oracle);
  harness.run("paraphrase-vector oracle: weighted mean within 1e-6", 0.0,
              eq3_oracle);
  harness.run("lexical split: disjoint vocabularies over 20 seeds", 0.0,
              lexical_split);
  harness.run("toy classification: integrated >= paraphrase, >= 0.95 F1", 0.0,
              toy_classification);
  harness.run("configuration fidelity: pinned defaults", 0.0, config_fidelity);

  std::filesystem::remove_all(g_tmp);
  if (harness.failures() > 0) {
    std::cout << harness.failures() << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 12 criteria passed\n";
  return 0;
}
