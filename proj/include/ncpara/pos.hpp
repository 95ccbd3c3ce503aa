#ifndef NCPARA_POS_HPP
#define NCPARA_POS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace ncpara {

enum class Pos : std::uint8_t {
  Noun = 0,
  Verb,
  Adjective,
  Adverb,
  Preposition,
  Determiner,
  Punct,
  Other,
};

inline constexpr int kPosCount = 8;

std::string_view pos_name(Pos pos);
std::optional<Pos> pos_from_name(std::string_view name);

// Pluggable token-level tagger. Inputs are single lowercase tokens; context-free
// by design so that mining stays a pure per-record function.
class Tagger {
 public:
  virtual ~Tagger() = default;
  virtual Pos tag(const std::string& token) const = 0;

  std::vector<Pos> tag_sequence(const std::vector<std::string>& tokens) const;
};

// Default tagger: closed-class word lists for prepositions, determiners,
// auxiliaries and frequent irregular verbs; suffix heuristics for the open
// classes; nouns otherwise.
class RuleBasedTagger final : public Tagger {
 public:
  RuleBasedTagger();
  Pos tag(const std::string& token) const override;

  // The closed preposition inventory, also used as the feature space of the
  // re-ranker's preposition bag.
  static const std::vector<std::string>& prepositions();

 private:
  std::unordered_set<std::string> prepositions_;
  std::unordered_set<std::string> determiners_;
  std::unordered_set<std::string> verbs_;
  std::unordered_set<std::string> adjectives_;
  std::unordered_set<std::string> adverbs_;
};

// Word -> lemma map with an exception list, light suffix stripping for English
// noun plurals, and identity fallback.
class Lemmatizer {
 public:
  Lemmatizer();
  explicit Lemmatizer(std::unordered_map<std::string, std::string> overrides);

  std::string lemma(const std::string& word) const;

 private:
  std::unordered_map<std::string, std::string> exceptions_;
};

std::string lowercase(std::string_view text);

}  // namespace ncpara

#endif
