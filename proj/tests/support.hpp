#ifndef NCPARA_TESTS_SUPPORT_HPP
#define NCPARA_TESTS_SUPPORT_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ncpara/embeddings.hpp"
#include "ncpara/model.hpp"
#include "ncpara/rng.hpp"
#include "ncpara/types.hpp"
#include "ncpara/vocab.hpp"

namespace ncpara::testing {

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Deterministic random embeddings for a word list.
inline EmbeddingTable random_table(const std::vector<std::string>& words, int dim,
                                   std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<std::string, Eigen::VectorXd>> pairs;
  pairs.reserve(words.size());
  for (const auto& word : words) {
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) v[i] = rng.uniform(-1.0, 1.0);
    pairs.emplace_back(word, v);
  }
  return EmbeddingTable::from_pairs(dim, pairs);
}

inline ParaphraseTemplate tmpl(const std::string& text) {
  return ParaphraseTemplate::parse(text);
}

// A small trained-shape model over the given instances (random parameters).
inline Model make_model(const std::vector<std::string>& words,
                        const std::vector<TrainingInstance>& instances, int dim,
                        std::uint64_t seed) {
  auto table = random_table(words, dim, seed);
  auto vocab = Vocabulary::build(table, instances);
  ModelConfig config;
  config.dim = dim;
  config.seed = seed;
  return Model(std::move(vocab), table, config);
}

}  // namespace ncpara::testing

#endif
