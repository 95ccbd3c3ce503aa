#ifndef NCPARA_RANKING_HPP
#define NCPARA_RANKING_HPP

#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <vector>

#include "ncpara/model.hpp"
#include "ncpara/pos.hpp"
#include "ncpara/types.hpp"

namespace ncpara {

// The five re-ranking features of a candidate paraphrase. Bags are count
// vectors over fixed inventories (POS classes, closed preposition list).
struct RankFeatures {
  std::vector<int> pos_counts;   // kPosCount entries
  std::vector<int> prep_counts;  // one per RuleBasedTagger::prepositions()
  int n_words = 0;
  bool ends_with_w1 = false;
  double guided_score = 0.0;     // cosine(compound slot, template encoding) * model score

  Eigen::VectorXd to_vector() const;
  int pos_count(Pos pos) const { return pos_counts[static_cast<int>(pos)]; }
  int prep_count(const std::string& prep) const;

  static int dimension();
};

struct CandidateParaphrase {
  ParaphraseTemplate tmpl;
  int template_id = -1;
  double model_score = 0.0;      // entry of the paraphrase distribution
  Eigen::VectorXd encoding;      // biLSTM template encoding
  RankFeatures features;
  double final_score = 0.0;
};

// Top-k templates by the model's paraphrase distribution, each with its
// template encoding attached. k larger than |V_p| is clamped with a warning.
std::vector<CandidateParaphrase> retrieve_candidates(const NounCompound& nc,
                                                     const Model& model, int k,
                                                     std::ostream* warn = nullptr);

double cosine_similarity(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

RankFeatures featurize(const CandidateParaphrase& candidate,
                       const Eigen::VectorXd& compound_encoding,
                       const Tagger& tagger);

// Fills features for a retrieved candidate list, computing the compound-slot
// encoding once.
void featurize_candidates(std::vector<CandidateParaphrase>& candidates,
                          const NounCompound& nc, const Model& model,
                          const Tagger& tagger);

// Linear pairwise preference model over feature differences; no bias term, so
// prefers(a, b) == !prefers(b, a) whenever the feature vectors differ.
class PairwiseRanker {
 public:
  explicit PairwiseRanker(Eigen::VectorXd weights) : weights_(std::move(weights)) {}

  double score(const Eigen::VectorXd& features) const { return weights_.dot(features); }
  bool prefers(const RankFeatures& a, const RankFeatures& b) const;
  const Eigen::VectorXd& weights() const { return weights_; }

  struct PairExample {
    Eigen::VectorXd x;  // feature difference
    int label = 1;      // +1: first element ranks higher
  };

  // One featurized gold list; gold_scores are rank weights, higher = better.
  struct TrainingList {
    std::vector<Eigen::VectorXd> features;
    std::vector<double> gold_scores;
  };

  // Builds both signed directions for every within-compound pair whose gold
  // scores differ; exact duplicates are dropped.
  static std::vector<PairExample> build_pairs(const std::vector<TrainingList>& lists);

  // Max-margin fit (hinge loss + L2) by deterministic full-batch subgradient
  // descent. Throws DataError when `lists` yields no pairs.
  static PairwiseRanker train(const std::vector<TrainingList>& lists,
                              double penalty_c = 1.0, int iterations = 1000);

 private:
  Eigen::VectorXd weights_;
};

struct RankedParaphrase {
  ParaphraseTemplate tmpl;
  double final_score = 0.0;
  double model_score = 0.0;
};

// Orders candidates by the pairwise ranker, scores position p of n with
// rank weight (n - p + 1) / n times the model score, prunes below the
// threshold and returns the survivors sorted by final score.
std::vector<RankedParaphrase> rerank_and_prune(std::vector<CandidateParaphrase> candidates,
                                               const PairwiseRanker& ranker,
                                               double threshold = 0.025);

// Training-data retrieval baseline: templates observed with exactly this
// compound, ranked by mined score; empty when the compound was never seen.
std::vector<RankedParaphrase> baseline_retrieve(
    const NounCompound& nc, const std::vector<TrainingInstance>& training_set);

}  // namespace ncpara

#endif
