#include "ncpara/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <set>

#include "ncpara/errors.hpp"

namespace ncpara {

Eigen::VectorXd RankFeatures::to_vector() const {
  Eigen::VectorXd v(dimension());
  int at = 0;
  for (int count : pos_counts) v[at++] = count;
  for (int count : prep_counts) v[at++] = count;
  v[at++] = n_words;
  v[at++] = ends_with_w1 ? 1.0 : 0.0;
  v[at++] = guided_score;
  return v;
}

int RankFeatures::prep_count(const std::string& prep) const {
  const auto& inventory = RuleBasedTagger::prepositions();
  for (std::size_t i = 0; i < inventory.size(); ++i) {
    if (inventory[i] == prep) return prep_counts[i];
  }
  return 0;
}

int RankFeatures::dimension() {
  return kPosCount + static_cast<int>(RuleBasedTagger::prepositions().size()) + 3;
}

std::vector<CandidateParaphrase> retrieve_candidates(const NounCompound& nc,
                                                     const Model& model, int k,
                                                     std::ostream* warn) {
  const int vp = model.vocab().template_count();
  if (k < 1) throw UsageError("k must be at least 1");
  if (k > vp) {
    if (warn) {
      (*warn) << "warning: k=" << k << " exceeds the paraphrase vocabulary ("
              << vp << "), clamping\n";
    }
    k = vp;
  }
  auto dist = model.predict_paraphrase(nc.w1, nc.w2);
  auto top = argmax_k(dist.probs, k);

  std::vector<CandidateParaphrase> candidates;
  candidates.reserve(top.size());
  for (const auto& [index, score] : top) {
    CandidateParaphrase candidate;
    candidate.tmpl = model.vocab().template_at(index);
    candidate.template_id = index;
    candidate.model_score = score;
    candidate.encoding = model.encode_template(candidate.tmpl);
    candidates.push_back(std::move(candidate));
  }
  return candidates;
}

double cosine_similarity(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  double na = a.norm();
  double nb = b.norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  return a.dot(b) / (na * nb);
}

RankFeatures featurize(const CandidateParaphrase& candidate,
                       const Eigen::VectorXd& compound_encoding,
                       const Tagger& tagger) {
  RankFeatures features;
  features.pos_counts.assign(kPosCount, 0);
  const auto& inventory = RuleBasedTagger::prepositions();
  features.prep_counts.assign(inventory.size(), 0);

  for (const auto& token : candidate.tmpl.tokens()) {
    if (token == kW1Placeholder || token == kW2Placeholder) continue;
    ++features.pos_counts[static_cast<int>(tagger.tag(token))];
    for (std::size_t i = 0; i < inventory.size(); ++i) {
      if (inventory[i] == token) {
        ++features.prep_counts[i];
        break;
      }
    }
  }
  features.n_words = static_cast<int>(candidate.tmpl.size());
  features.ends_with_w1 = candidate.tmpl.ends_with_w1();
  features.guided_score =
      cosine_similarity(compound_encoding, candidate.encoding) * candidate.model_score;
  return features;
}

void featurize_candidates(std::vector<CandidateParaphrase>& candidates,
                          const NounCompound& nc, const Model& model,
                          const Tagger& tagger) {
  Eigen::VectorXd compound_encoding = model.compound_slot_encoding(nc.w1, nc.w2);
  for (auto& candidate : candidates) {
    candidate.features = featurize(candidate, compound_encoding, tagger);
  }
}

bool PairwiseRanker::prefers(const RankFeatures& a, const RankFeatures& b) const {
  Eigen::VectorXd fa = a.to_vector();
  Eigen::VectorXd fb = b.to_vector();
  double margin = weights_.dot(fa - fb);
  if (margin != 0.0) return margin > 0.0;
  // Deterministic tie-break keeping the preference antisymmetric.
  for (Eigen::Index i = 0; i < fa.size(); ++i) {
    if (fa[i] != fb[i]) return fa[i] > fb[i];
  }
  return false;
}

std::vector<PairwiseRanker::PairExample> PairwiseRanker::build_pairs(
    const std::vector<TrainingList>& lists) {
  std::set<std::pair<std::vector<double>, int>> seen;
  std::vector<PairExample> pairs;
  for (const auto& list : lists) {
    const std::size_t n = list.features.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || list.gold_scores[i] == list.gold_scores[j]) continue;
        Eigen::VectorXd x = list.features[i] - list.features[j];
        int label = list.gold_scores[i] > list.gold_scores[j] ? 1 : -1;
        std::vector<double> key(x.data(), x.data() + x.size());
        if (!seen.insert({std::move(key), label}).second) continue;
        pairs.push_back({std::move(x), label});
      }
    }
  }
  return pairs;
}

PairwiseRanker PairwiseRanker::train(const std::vector<TrainingList>& lists,
                                     double penalty_c, int iterations) {
  auto pairs = build_pairs(lists);
  if (pairs.empty()) {
    throw DataError("pairwise ranker needs at least one pair of differently "
                    "ranked paraphrases for some compound");
  }
  const Eigen::Index dim = pairs.front().x.size();
  const double m = static_cast<double>(pairs.size());
  const double lambda = 1.0 / (penalty_c * m);

  Eigen::VectorXd w = Eigen::VectorXd::Zero(dim);
  for (int t = 1; t <= iterations; ++t) {
    Eigen::VectorXd subgrad = lambda * w;
    for (const auto& pair : pairs) {
      double margin = pair.label * w.dot(pair.x);
      if (margin < 1.0) subgrad -= (pair.label / m) * pair.x;
    }
    double step = 1.0 / (lambda * static_cast<double>(t + 1));
    w -= step * subgrad;
  }
  return PairwiseRanker(std::move(w));
}

std::vector<RankedParaphrase> rerank_and_prune(
    std::vector<CandidateParaphrase> candidates, const PairwiseRanker& ranker,
    double threshold) {
  std::sort(candidates.begin(), candidates.end(),
            [&](const CandidateParaphrase& a, const CandidateParaphrase& b) {
              return ranker.prefers(a.features, b.features);
            });
  const double n = static_cast<double>(candidates.size());
  std::vector<RankedParaphrase> kept;
  for (std::size_t position = 0; position < candidates.size(); ++position) {
    double rank_weight = (n - static_cast<double>(position)) / n;
    double final_score = rank_weight * candidates[position].model_score;
    if (final_score < threshold) continue;
    kept.push_back({candidates[position].tmpl, final_score,
                    candidates[position].model_score});
  }
  std::sort(kept.begin(), kept.end(),
            [](const RankedParaphrase& a, const RankedParaphrase& b) {
              if (a.final_score != b.final_score) return a.final_score > b.final_score;
              if (a.model_score != b.model_score) return a.model_score > b.model_score;
              return a.tmpl < b.tmpl;
            });
  return kept;
}

std::vector<RankedParaphrase> baseline_retrieve(
    const NounCompound& nc, const std::vector<TrainingInstance>& training_set) {
  std::map<ParaphraseTemplate, double> scores;
  for (const auto& instance : training_set) {
    if (instance.w1 == nc.w1 && instance.w2 == nc.w2) {
      scores[instance.tmpl] += instance.score;
    }
  }
  std::vector<RankedParaphrase> out;
  out.reserve(scores.size());
  for (const auto& [tmpl, score] : scores) out.push_back({tmpl, score, score});
  std::sort(out.begin(), out.end(),
            [](const RankedParaphrase& a, const RankedParaphrase& b) {
              if (a.final_score != b.final_score) return a.final_score > b.final_score;
              return a.tmpl < b.tmpl;
            });
  return out;
}

}  // namespace ncpara
