#ifndef NCPARA_SCORER_HPP
#define NCPARA_SCORER_HPP

#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <vector>

#include "ncpara/io.hpp"
#include "ncpara/types.hpp"

namespace ncpara {

struct GoldEntry {
  std::string paraphrase;
  double weight = 1.0;  // positive; higher = more strongly annotated
};

struct GoldList {
  NounCompound compound;
  std::vector<GoldEntry> entries;
};

// Word-level partial credit: 1 on equality, common-prefix fraction when the
// shared prefix has at least 3 characters, otherwise 0.
double word_match(const std::string& pred_word, const std::string& gold_word);

// Phrase-level credit between two token sequences: symmetric best-match over
// unigrams, averaged with the same over bigrams when both sides have them.
double phrase_credit(const std::vector<std::string>& pred_tokens,
                     const std::vector<std::string>& gold_tokens);

enum class MatchMode { Isomorphic, NonIsomorphic };

// Isomorphic: best one-to-one alignment of predicted to gold entries, each
// pair's credit damped by rank agreement and weighted by the gold entry
// weight, normalized by the total gold weight. Non-isomorphic: mean best
// credit of the predicted entries, order-free, precision only.
double list_match(const std::vector<std::string>& predictions,
                  const GoldList& gold, MatchMode mode);

struct CompoundScore {
  NounCompound compound;
  double isomorphic = 0.0;
  double non_isomorphic = 0.0;
};

struct ScoreReport {
  double isomorphic = 0.0;
  double non_isomorphic = 0.0;
  std::vector<CompoundScore> per_compound;
  int ignored_predictions = 0;  // predictions for compounds absent from gold
};

ScoreReport score_system(const RankedListMap& predictions,
                         const std::vector<GoldList>& gold,
                         std::ostream* warn = nullptr);

std::vector<GoldList> gold_lists_from_ranked(const RankedListMap& lists);

// Exact maximum-weight one-to-one assignment value for a non-negative weight
// matrix (rows and columns may be left unmatched).
double max_weight_assignment(const Eigen::MatrixXd& weights);

// Normalized rank of position `index` in a list of `size` entries.
double normalized_rank(std::size_t index, std::size_t size);

}  // namespace ncpara

#endif
