#include "ncpara/vocab.hpp"

#include "ncpara/embeddings.hpp"

namespace ncpara {

Vocabulary::Vocabulary() { add_word(kUnkWord); }

Vocabulary Vocabulary::build(const EmbeddingTable& table,
                             const std::vector<TrainingInstance>& instances) {
  Vocabulary vocab;
  for (const auto& word : table.words()) vocab.add_word(word);
  for (const auto& instance : instances) vocab.add_template(instance.tmpl);
  return vocab;
}

int Vocabulary::add_word(const std::string& word) {
  auto it = word_index_.find(word);
  if (it != word_index_.end()) return it->second;
  int id = static_cast<int>(words_.size());
  words_.push_back(word);
  word_index_[word] = id;
  return id;
}

int Vocabulary::word_id(const std::string& word) const {
  auto it = word_index_.find(word);
  return it == word_index_.end() ? kUnkId : it->second;
}

const std::string& Vocabulary::word(int id) const { return words_.at(id); }

int Vocabulary::add_template(const ParaphraseTemplate& tmpl) {
  auto it = template_index_.find(tmpl);
  if (it != template_index_.end()) return it->second;
  int id = static_cast<int>(templates_.size());
  templates_.push_back(tmpl);
  template_index_[tmpl] = id;
  return id;
}

int Vocabulary::template_id(const ParaphraseTemplate& tmpl) const {
  auto it = template_index_.find(tmpl);
  return it == template_index_.end() ? -1 : it->second;
}

const ParaphraseTemplate& Vocabulary::template_at(int id) const {
  return templates_.at(id);
}

Token Vocabulary::token_of(const std::string& surface) const {
  if (surface == kW1Placeholder) return Token::placeholder(SpecialToken::W1);
  if (surface == kW2Placeholder) return Token::placeholder(SpecialToken::W2);
  return Token::word(word_id(surface));
}

}  // namespace ncpara
