#include "ncpara/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "ncpara/errors.hpp"
#include "ncpara/rng.hpp"

namespace ncpara {

SplitResult make_split(const std::vector<LabeledCompound>& dataset,
                       const SplitSpec& spec, std::uint64_t seed) {
  if (dataset.empty()) throw DataError("cannot split an empty dataset");
  const std::size_t n = dataset.size();
  Rng rng(seed);
  SplitResult result;

  if (spec.kind == SplitKind::Random) {
    std::vector<int> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
    rng.shuffle(order);
    std::size_t n_train = static_cast<std::size_t>(
        std::floor(spec.train_ratio * static_cast<double>(n)));
    std::size_t n_test = static_cast<std::size_t>(
        std::floor(spec.test_ratio * static_cast<double>(n)));
    for (std::size_t i = 0; i < n; ++i) {
      if (i < n_train) {
        result.train.push_back(order[i]);
      } else if (i < n_train + n_test) {
        result.test.push_back(order[i]);
      } else {
        result.val.push_back(order[i]);
      }
    }
    return result;
  }

  // Lexical split: pool the constituent vocabulary first.
  std::set<std::string> word_set;
  for (const auto& item : dataset) {
    word_set.insert(item.w1);
    word_set.insert(item.w2);
  }
  std::vector<std::string> words(word_set.begin(), word_set.end());
  rng.shuffle(words);

  const double ratios[3] = {spec.train_ratio, spec.test_ratio, spec.val_ratio};
  double targets[3];
  std::size_t sizes[3] = {0, 0, 0};
  for (int p = 0; p < 3; ++p) {
    targets[p] = ratios[p] * static_cast<double>(words.size());
  }
  std::map<std::string, int> pool_of;
  for (const auto& word : words) {
    int best = -1;
    double best_fill = 0.0;
    for (int p = 0; p < 3; ++p) {
      if (targets[p] <= 0.0) continue;
      double fill = static_cast<double>(sizes[p]) / targets[p];
      if (best < 0 || fill < best_fill) {
        best = p;
        best_fill = fill;
      }
    }
    pool_of[word] = best;
    ++sizes[best];
  }

  for (std::size_t i = 0; i < n; ++i) {
    int p1 = pool_of.at(dataset[i].w1);
    int p2 = pool_of.at(dataset[i].w2);
    if (p1 != p2) {
      ++result.discarded;
      continue;
    }
    if (p1 == 0) {
      result.train.push_back(static_cast<int>(i));
    } else if (p1 == 1) {
      result.test.push_back(static_cast<int>(i));
    } else {
      result.val.push_back(static_cast<int>(i));
    }
  }
  if (result.train.empty() || result.test.empty() || result.val.empty()) {
    throw DataError("lexical split produced an empty set (pools: train=" +
                    std::to_string(sizes[0]) + " test=" + std::to_string(sizes[1]) +
                    " val=" + std::to_string(sizes[2]) + " words, discarded " +
                    std::to_string(result.discarded) + " compounds)");
  }
  return result;
}

Eigen::VectorXd paraphrase_vector(const NounCompound& nc, const Model& model, int k) {
  if (k < 1) throw UsageError("paraphrase_vector needs k >= 1");
  k = std::min(k, model.vocab().template_count());
  auto dist = model.predict_paraphrase(nc.w1, nc.w2);
  auto top = argmax_k(dist.probs, k);

  Eigen::VectorXd sum = Eigen::VectorXd::Zero(model.output_dim());
  double total = 0.0;
  for (const auto& [index, confidence] : top) {
    sum += confidence * model.encode_template(model.vocab().template_at(index));
    total += confidence;
  }
  return sum / total;
}

std::string variant_name(FeatureVariant variant) {
  switch (variant) {
    case FeatureVariant::Distributional: return "distributional";
    case FeatureVariant::Paraphrase: return "paraphrase";
    case FeatureVariant::Integrated: return "integrated";
  }
  return "";
}

FeatureVariant variant_from_name(const std::string& name) {
  if (name == "distributional") return FeatureVariant::Distributional;
  if (name == "paraphrase") return FeatureVariant::Paraphrase;
  if (name == "integrated") return FeatureVariant::Integrated;
  throw UsageError("unknown feature variant: " + name);
}

namespace {

Eigen::VectorXd table_vector(const EmbeddingTable& table, const std::string& word) {
  auto index = table.find(word);
  return index ? table.vector_of(*index) : table.unk_vector();
}

}  // namespace

Eigen::VectorXd build_features(const NounCompound& nc, FeatureVariant variant,
                               const Model* model, const EmbeddingTable& table,
                               int k) {
  const int d = table.dim();
  if (variant == FeatureVariant::Distributional) {
    Eigen::VectorXd features(2 * d);
    features.head(d) = table_vector(table, nc.w1);
    features.tail(d) = table_vector(table, nc.w2);
    return features;
  }
  if (!model) {
    throw UsageError("the " + variant_name(variant) +
                     " variant needs a trained model checkpoint");
  }
  Eigen::VectorXd par = paraphrase_vector(nc, *model, k);
  if (variant == FeatureVariant::Paraphrase) return par;
  Eigen::VectorXd features(4 * d);
  features.head(2 * d) = par;
  features.segment(2 * d, d) = table_vector(table, nc.w1);
  features.tail(d) = table_vector(table, nc.w2);
  return features;
}

void LinearClassifier::fit(const Eigen::MatrixXd& features,
                           const std::vector<int>& labels, int n_classes,
                           ClassifierFamily family, double penalty_c,
                           int iterations) {
  const Eigen::Index n = features.rows();
  const Eigen::Index d = features.cols();
  if (n == 0) throw DataError("classifier training set is empty");

  mean_ = features.colwise().mean();
  scale_.resize(d);
  for (Eigen::Index j = 0; j < d; ++j) {
    double var = (features.col(j).array() - mean_[j]).square().sum() /
                 static_cast<double>(n);
    scale_[j] = var > 1e-12 ? std::sqrt(var) : 1.0;
  }
  Eigen::MatrixXd x(n, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    x.col(j) = (features.col(j).array() - mean_[j]) / scale_[j];
  }

  weights_ = Eigen::MatrixXd::Zero(n_classes, d);
  bias_ = Eigen::VectorXd::Zero(n_classes);
  Eigen::MatrixXd vel_w = Eigen::MatrixXd::Zero(n_classes, d);
  Eigen::VectorXd vel_b = Eigen::VectorXd::Zero(n_classes);

  const double lambda = 1.0 / (penalty_c * static_cast<double>(n));
  const double lr = 0.5;
  const double momentum = 0.9;

  for (int it = 0; it < iterations; ++it) {
    Eigen::MatrixXd grad_w = lambda * weights_;
    Eigen::VectorXd grad_b = Eigen::VectorXd::Zero(n_classes);
    Eigen::MatrixXd scores = x * weights_.transpose();  // n x classes
    scores.rowwise() += bias_.transpose();

    if (family == ClassifierFamily::Logistic) {
      for (Eigen::Index i = 0; i < n; ++i) {
        Eigen::VectorXd row = scores.row(i);
        double max = row.maxCoeff();
        Eigen::VectorXd p = (row.array() - max).exp();
        p /= p.sum();
        p[labels[i]] -= 1.0;
        p /= static_cast<double>(n);
        grad_w.noalias() += p * x.row(i);
        grad_b += p;
      }
    } else {
      // One-vs-rest hinge.
      for (Eigen::Index i = 0; i < n; ++i) {
        for (int c = 0; c < n_classes; ++c) {
          double y = labels[i] == c ? 1.0 : -1.0;
          if (y * scores(i, c) < 1.0) {
            grad_w.row(c).noalias() -= (y / static_cast<double>(n)) * x.row(i);
            grad_b[c] -= y / static_cast<double>(n);
          }
        }
      }
    }

    vel_w = momentum * vel_w - lr * grad_w;
    vel_b = momentum * vel_b - lr * grad_b;
    weights_ += vel_w;
    bias_ += vel_b;
  }
}

int LinearClassifier::predict(const Eigen::VectorXd& features) const {
  Eigen::VectorXd x = (features - mean_).cwiseQuotient(scale_);
  Eigen::VectorXd scores = weights_ * x + bias_;
  int best = 0;
  for (Eigen::Index c = 1; c < scores.size(); ++c) {
    if (scores[c] > scores[best]) best = static_cast<int>(c);
  }
  return best;
}

EvalReport evaluate_predictions(const std::vector<int>& gold,
                                const std::vector<int>& predicted,
                                const std::vector<std::string>& labels) {
  const int n_classes = static_cast<int>(labels.size());
  std::vector<int> tp(n_classes, 0), fp(n_classes, 0), fn(n_classes, 0),
      support(n_classes, 0);
  for (std::size_t i = 0; i < gold.size(); ++i) {
    ++support[gold[i]];
    if (gold[i] == predicted[i]) {
      ++tp[gold[i]];
    } else {
      ++fp[predicted[i]];
      ++fn[gold[i]];
    }
  }

  EvalReport report;
  double weighted = 0.0;
  int total_support = 0;
  for (int c = 0; c < n_classes; ++c) {
    if (support[c] == 0) continue;
    ClassScore row;
    row.label = labels[c];
    row.support = support[c];
    double denom_p = tp[c] + fp[c];
    double denom_r = tp[c] + fn[c];
    row.precision = denom_p > 0 ? tp[c] / denom_p : 0.0;
    row.recall = denom_r > 0 ? tp[c] / denom_r : 0.0;
    row.f1 = (row.precision + row.recall) > 0
                 ? 2.0 * row.precision * row.recall / (row.precision + row.recall)
                 : 0.0;
    weighted += row.f1 * support[c];
    total_support += support[c];
    report.per_class.push_back(std::move(row));
  }
  report.weighted_f1 = total_support > 0 ? weighted / total_support : 0.0;
  return report;
}

EvalReport train_and_evaluate(const std::vector<LabeledCompound>& dataset,
                              const SplitSpec& spec, FeatureVariant variant,
                              const Model* model, const EmbeddingTable& table,
                              const ClassifierConfig& config, std::uint64_t seed) {
  SplitResult split = make_split(dataset, spec, seed);
  return train_and_evaluate_on_split(dataset, split, variant, model, table, config);
}

EvalReport train_and_evaluate_on_split(const std::vector<LabeledCompound>& dataset,
                                       const SplitResult& split,
                                       FeatureVariant variant, const Model* model,
                                       const EmbeddingTable& table,
                                       const ClassifierConfig& config) {
  if (split.train.empty() || split.test.empty() || split.val.empty()) {
    throw DataError("classification needs non-empty train/test/val splits");
  }

  std::vector<std::string> labels;
  {
    std::set<std::string> label_set;
    for (const auto& item : dataset) label_set.insert(item.label);
    labels.assign(label_set.begin(), label_set.end());
  }
  std::map<std::string, int> label_id;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    label_id[labels[i]] = static_cast<int>(i);
  }

  // Feature cache: k only matters for the paraphrase-bearing variants.
  std::vector<int> k_values = variant == FeatureVariant::Distributional
                                  ? std::vector<int>{0}
                                  : config.k_grid;
  std::map<int, Eigen::MatrixXd> features_by_k;
  for (int k : k_values) {
    Eigen::MatrixXd features;
    for (std::size_t i = 0; i < dataset.size(); ++i) {
      NounCompound nc{dataset[i].w1, dataset[i].w2};
      Eigen::VectorXd f =
          build_features(nc, variant, model, table, std::max(k, 1));
      if (features.size() == 0) {
        features.resize(dataset.size(), f.size());
      }
      features.row(static_cast<Eigen::Index>(i)) = f;
    }
    features_by_k[k] = std::move(features);
  }

  auto gather = [&](const Eigen::MatrixXd& all, const std::vector<int>& idx) {
    Eigen::MatrixXd out(idx.size(), all.cols());
    for (std::size_t i = 0; i < idx.size(); ++i) out.row(i) = all.row(idx[i]);
    return out;
  };
  auto labels_of = [&](const std::vector<int>& idx) {
    std::vector<int> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(label_id.at(dataset[i].label));
    return out;
  };

  const std::vector<int> y_train = labels_of(split.train);
  const std::vector<int> y_val = labels_of(split.val);
  const std::vector<int> y_test = labels_of(split.test);

  struct GridPoint {
    ClassifierFamily family;
    int k;
    double penalty;
  };
  GridPoint best_point{ClassifierFamily::MaxMargin, k_values.front(),
                       config.penalty_grid.front()};
  double best_val = -1.0;
  for (auto family : {ClassifierFamily::MaxMargin, ClassifierFamily::Logistic}) {
    for (int k : k_values) {
      const Eigen::MatrixXd& all = features_by_k.at(k);
      Eigen::MatrixXd x_train = gather(all, split.train);
      Eigen::MatrixXd x_val = gather(all, split.val);
      for (double penalty : config.penalty_grid) {
        LinearClassifier clf;
        clf.fit(x_train, y_train, static_cast<int>(labels.size()), family,
                penalty, config.iterations);
        std::vector<int> pred;
        pred.reserve(split.val.size());
        for (Eigen::Index i = 0; i < x_val.rows(); ++i) {
          pred.push_back(clf.predict(x_val.row(i)));
        }
        double f1 = evaluate_predictions(y_val, pred, labels).weighted_f1;
        if (f1 > best_val) {
          best_val = f1;
          best_point = {family, k, penalty};
        }
      }
    }
  }

  const Eigen::MatrixXd& all = features_by_k.at(best_point.k);
  LinearClassifier final_clf;
  final_clf.fit(gather(all, split.train), y_train, static_cast<int>(labels.size()),
                best_point.family, best_point.penalty, config.iterations);
  Eigen::MatrixXd x_test = gather(all, split.test);
  std::vector<int> predictions;
  predictions.reserve(split.test.size());
  for (Eigen::Index i = 0; i < x_test.rows(); ++i) {
    predictions.push_back(final_clf.predict(x_test.row(i)));
  }

  EvalReport report = evaluate_predictions(y_test, predictions, labels);
  report.chosen_family =
      best_point.family == ClassifierFamily::MaxMargin ? "max-margin" : "logistic";
  report.chosen_k = best_point.k;
  report.chosen_penalty = best_point.penalty;
  report.discarded = split.discarded;
  report.split = split;

  std::set<int> train_labels(y_train.begin(), y_train.end());
  for (int y : y_test) {
    if (!train_labels.count(y)) {
      std::string warning = "class absent from training split, F1 is 0: " + labels[y];
      if (std::find(report.warnings.begin(), report.warnings.end(), warning) ==
          report.warnings.end()) {
        report.warnings.push_back(warning);
      }
    }
  }
  return report;
}

}  // namespace ncpara
