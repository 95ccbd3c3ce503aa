#include "ncpara/scorer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <set>

#include "ncpara/pos.hpp"

namespace ncpara {

double word_match(const std::string& pred_word, const std::string& gold_word) {
  if (pred_word == gold_word) return 1.0;
  std::size_t lcp = 0;
  std::size_t limit = std::min(pred_word.size(), gold_word.size());
  while (lcp < limit && pred_word[lcp] == gold_word[lcp]) ++lcp;
  if (lcp < 3) return 0.0;
  return static_cast<double>(lcp) /
         static_cast<double>(std::max(pred_word.size(), gold_word.size()));
}

namespace {

double bigram_match(const std::pair<std::string, std::string>& a,
                    const std::pair<std::string, std::string>& b) {
  return 0.5 * (word_match(a.first, b.first) + word_match(a.second, b.second));
}

template <typename Item, typename MatchFn>
double symmetric_best_match(const std::vector<Item>& a, const std::vector<Item>& b,
                            MatchFn match) {
  auto directed = [&](const std::vector<Item>& from, const std::vector<Item>& to) {
    double total = 0.0;
    for (const auto& x : from) {
      double best = 0.0;
      for (const auto& y : to) best = std::max(best, match(x, y));
      total += best;
    }
    return total / static_cast<double>(from.size());
  };
  return 0.5 * (directed(a, b) + directed(b, a));
}

std::vector<std::pair<std::string, std::string>> bigrams_of(
    const std::vector<std::string>& tokens) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    out.emplace_back(tokens[i], tokens[i + 1]);
  }
  return out;
}

std::vector<std::string> tokenize_paraphrase(const std::string& text) {
  return split_whitespace(lowercase(text));
}

}  // namespace

double phrase_credit(const std::vector<std::string>& pred_tokens,
                     const std::vector<std::string>& gold_tokens) {
  if (pred_tokens.empty() || gold_tokens.empty()) return 0.0;
  double unigram = symmetric_best_match(
      pred_tokens, gold_tokens,
      [](const std::string& a, const std::string& b) { return word_match(a, b); });
  if (pred_tokens.size() < 2 || gold_tokens.size() < 2) return unigram;
  double bigram = symmetric_best_match(bigrams_of(pred_tokens),
                                       bigrams_of(gold_tokens), bigram_match);
  return 0.5 * (unigram + bigram);
}

double normalized_rank(std::size_t index, std::size_t size) {
  if (size <= 1) return 0.0;
  return static_cast<double>(index) / static_cast<double>(size - 1);
}

double max_weight_assignment(const Eigen::MatrixXd& weights) {
  const int rows = static_cast<int>(weights.rows());
  const int cols = static_cast<int>(weights.cols());
  if (rows == 0 || cols == 0) return 0.0;
  const int n = std::max(rows, cols);
  constexpr double kInf = std::numeric_limits<double>::infinity();

  // Jonker-Volgenant style potentials over the padded square cost matrix
  // cost(i, j) = -weights(i, j), padding 0.
  auto cost = [&](int i, int j) {
    if (i < rows && j < cols) return -weights(i, j);
    return 0.0;
  };

  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> match(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<double> min_v(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      int i0 = match[j0], j1 = 0;
      double delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < min_v[j]) {
          min_v[j] = cur;
          way[j] = j0;
        }
        if (min_v[j] < delta) {
          delta = min_v[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          min_v[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0);
  }

  double total = 0.0;
  for (int j = 1; j <= n; ++j) {
    int i = match[j];
    if (i >= 1 && i <= rows && j <= cols) total += weights(i - 1, j - 1);
  }
  return total;
}

double list_match(const std::vector<std::string>& predictions,
                  const GoldList& gold, MatchMode mode) {
  if (gold.entries.empty()) return 0.0;
  if (predictions.empty()) return 0.0;

  std::vector<std::vector<std::string>> pred_tokens;
  pred_tokens.reserve(predictions.size());
  for (const auto& p : predictions) pred_tokens.push_back(tokenize_paraphrase(p));

  // Gold rank order comes from the annotation weights, not file order, so
  // permuting a gold list leaves scores unchanged.
  std::vector<GoldEntry> ordered = gold.entries;
  std::sort(ordered.begin(), ordered.end(),
            [](const GoldEntry& a, const GoldEntry& b) {
              if (a.weight != b.weight) return a.weight > b.weight;
              return a.paraphrase < b.paraphrase;
            });
  std::vector<std::vector<std::string>> gold_tokens;
  gold_tokens.reserve(ordered.size());
  for (const auto& entry : ordered) {
    gold_tokens.push_back(tokenize_paraphrase(entry.paraphrase));
  }

  if (mode == MatchMode::NonIsomorphic) {
    double total = 0.0;
    for (const auto& pred : pred_tokens) {
      double best = 0.0;
      for (const auto& g : gold_tokens) best = std::max(best, phrase_credit(pred, g));
      total += best;
    }
    return total / static_cast<double>(pred_tokens.size());
  }

  Eigen::MatrixXd pair_value(pred_tokens.size(), gold_tokens.size());
  for (std::size_t i = 0; i < pred_tokens.size(); ++i) {
    for (std::size_t j = 0; j < gold_tokens.size(); ++j) {
      double agreement = 1.0 - std::abs(normalized_rank(i, pred_tokens.size()) -
                                        normalized_rank(j, gold_tokens.size()));
      pair_value(i, j) =
          phrase_credit(pred_tokens[i], gold_tokens[j]) * agreement * ordered[j].weight;
    }
  }
  double total_weight = 0.0;
  for (const auto& entry : ordered) total_weight += entry.weight;
  return max_weight_assignment(pair_value) / total_weight;
}

std::vector<GoldList> gold_lists_from_ranked(const RankedListMap& lists) {
  std::vector<GoldList> out;
  out.reserve(lists.size());
  for (const auto& [nc, entries] : lists) {
    GoldList gold;
    gold.compound = nc;
    for (const auto& entry : entries) {
      gold.entries.push_back({entry.paraphrase, entry.score});
    }
    out.push_back(std::move(gold));
  }
  return out;
}

ScoreReport score_system(const RankedListMap& predictions,
                         const std::vector<GoldList>& gold,
                         std::ostream* warn) {
  ScoreReport report;
  if (gold.empty()) return report;

  std::set<NounCompound> gold_compounds;
  for (const auto& list : gold) gold_compounds.insert(list.compound);
  for (const auto& [nc, entries] : predictions) {
    if (!gold_compounds.count(nc)) {
      ++report.ignored_predictions;
      if (warn) {
        (*warn) << "warning: prediction for compound not in gold, ignored: "
                << nc.w1 << ' ' << nc.w2 << "\n";
      }
    }
  }

  for (const auto& list : gold) {
    std::vector<std::string> pred_strings;
    auto it = predictions.find(list.compound);
    if (it != predictions.end()) {
      for (const auto& entry : it->second) pred_strings.push_back(entry.paraphrase);
    }
    CompoundScore row;
    row.compound = list.compound;
    row.isomorphic = list_match(pred_strings, list, MatchMode::Isomorphic);
    row.non_isomorphic = list_match(pred_strings, list, MatchMode::NonIsomorphic);
    report.per_compound.push_back(row);
    report.isomorphic += row.isomorphic;
    report.non_isomorphic += row.non_isomorphic;
  }
  report.isomorphic /= static_cast<double>(gold.size());
  report.non_isomorphic /= static_cast<double>(gold.size());
  return report;
}

}  // namespace ncpara
