#ifndef NCPARA_VOCAB_HPP
#define NCPARA_VOCAB_HPP

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncpara/types.hpp"

namespace ncpara {

class EmbeddingTable;

// Placeholder tokens with their own learned embeddings.
enum class SpecialToken : int { W1 = 0, W2 = 1, P = 2 };
inline constexpr int kSpecialCount = 3;

// One encoder input element: either a word-vocabulary index or a special.
struct Token {
  bool special = false;
  int id = 0;

  static Token word(int id) { return {false, id}; }
  static Token placeholder(SpecialToken s) { return {true, static_cast<int>(s)}; }
  bool operator==(const Token&) const = default;
};

// The two prediction vocabularies: words (index 0 reserved for <unk>) and
// paraphrase templates observed in the training data.
class Vocabulary {
 public:
  static constexpr int kUnkId = 0;

  Vocabulary();

  // Word side: the embedding-table words in table order, after <unk>.
  static Vocabulary build(const EmbeddingTable& table,
                          const std::vector<TrainingInstance>& instances);

  int add_word(const std::string& word);
  int word_id(const std::string& word) const;  // kUnkId when unknown
  const std::string& word(int id) const;
  int word_count() const { return static_cast<int>(words_.size()); }

  int add_template(const ParaphraseTemplate& tmpl);
  int template_id(const ParaphraseTemplate& tmpl) const;  // -1 when unknown
  const ParaphraseTemplate& template_at(int id) const;
  int template_count() const { return static_cast<int>(templates_.size()); }

  // Resolves a surface token to an encoder input; placeholder strings map to
  // specials, unknown words to <unk>.
  Token token_of(const std::string& surface) const;

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, int> word_index_;
  std::vector<ParaphraseTemplate> templates_;
  std::map<ParaphraseTemplate, int> template_index_;
};

}  // namespace ncpara

#endif
