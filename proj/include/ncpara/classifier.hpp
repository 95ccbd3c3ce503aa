#ifndef NCPARA_CLASSIFIER_HPP
#define NCPARA_CLASSIFIER_HPP

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "ncpara/embeddings.hpp"
#include "ncpara/model.hpp"
#include "ncpara/types.hpp"

namespace ncpara {

enum class SplitKind { Random, Lexical };

struct SplitSpec {
  SplitKind kind = SplitKind::Random;
  double train_ratio = 0.75;
  double test_ratio = 0.20;
  double val_ratio = 0.05;
};

struct SplitResult {
  std::vector<int> train;
  std::vector<int> test;
  std::vector<int> val;
  int discarded = 0;  // lexical split: compounds straddling word pools
};

// Random: seeded shuffle cut into floor(train*n) / floor(test*n) / rest.
// Lexical: constituent words are greedily assigned to three disjoint pools;
// a compound lands in a set only when both constituents share its pool.
SplitResult make_split(const std::vector<LabeledCompound>& dataset,
                       const SplitSpec& spec, std::uint64_t seed);

// Confidence-weighted mean of the top-k predicted template encodings.
Eigen::VectorXd paraphrase_vector(const NounCompound& nc, const Model& model, int k);

enum class FeatureVariant { Distributional, Paraphrase, Integrated };

std::string variant_name(FeatureVariant variant);
FeatureVariant variant_from_name(const std::string& name);  // throws UsageError

// distributional: [w1 vec, w2 vec]; paraphrase: par(nc); integrated:
// [par(nc), w1 vec, w2 vec]. Constituent vectors come straight from the
// pre-trained table (zero vector when out of vocabulary).
Eigen::VectorXd build_features(const NounCompound& nc, FeatureVariant variant,
                               const Model* model, const EmbeddingTable& table,
                               int k);

struct ClassifierConfig {
  std::vector<int> k_grid = {5, 15, 25, 50};
  std::vector<double> penalty_grid = {0.1, 1.0, 10.0};
  int iterations = 300;
};

enum class ClassifierFamily { MaxMargin, Logistic };

// Linear multi-class classifier trained by deterministic full-batch gradient
// descent on standardized features; one-vs-rest hinge or multinomial logistic.
class LinearClassifier {
 public:
  void fit(const Eigen::MatrixXd& features, const std::vector<int>& labels,
           int n_classes, ClassifierFamily family, double penalty_c,
           int iterations);
  int predict(const Eigen::VectorXd& features) const;

 private:
  Eigen::MatrixXd weights_;  // classes x dim
  Eigen::VectorXd bias_;
  Eigen::VectorXd mean_, scale_;
};

struct ClassScore {
  std::string label;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  int support = 0;
};

struct EvalReport {
  double weighted_f1 = 0.0;
  std::vector<ClassScore> per_class;
  std::string chosen_family;
  int chosen_k = 0;
  double chosen_penalty = 0.0;
  int discarded = 0;
  std::vector<std::string> warnings;
  SplitResult split;  // the manifest the scores were computed on
};

// Support-weighted F1 of `predicted` against `gold` over the given label
// inventory, with per-class precision/recall rows for labels present in gold.
EvalReport evaluate_predictions(const std::vector<int>& gold,
                                const std::vector<int>& predicted,
                                const std::vector<std::string>& labels);

// Grid search over {family} x {k} x {penalty} on validation weighted F1,
// refit of the winner on the training set, report on the test set.
EvalReport train_and_evaluate(const std::vector<LabeledCompound>& dataset,
                              const SplitSpec& spec, FeatureVariant variant,
                              const Model* model, const EmbeddingTable& table,
                              const ClassifierConfig& config, std::uint64_t seed);

EvalReport train_and_evaluate_on_split(const std::vector<LabeledCompound>& dataset,
                                       const SplitResult& split,
                                       FeatureVariant variant, const Model* model,
                                       const EmbeddingTable& table,
                                       const ClassifierConfig& config);

}  // namespace ncpara

#endif
