#include "ncpara/pos.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace ncpara {

namespace {

const std::array<std::string_view, kPosCount> kPosNames = {
    "NOUN", "VERB", "ADJ", "ADV", "PREP", "DET", "PUNCT", "OTHER"};

bool ends_with(std::string_view word, std::string_view suffix) {
  return word.size() >= suffix.size() &&
         word.substr(word.size() - suffix.size()) == suffix;
}

}  // namespace

std::string_view pos_name(Pos pos) { return kPosNames[static_cast<int>(pos)]; }

std::optional<Pos> pos_from_name(std::string_view name) {
  for (int i = 0; i < kPosCount; ++i) {
    if (kPosNames[i] == name) return static_cast<Pos>(i);
  }
  return std::nullopt;
}

std::string lowercase(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

std::vector<Pos> Tagger::tag_sequence(const std::vector<std::string>& tokens) const {
  std::vector<Pos> tags;
  tags.reserve(tokens.size());
  for (const auto& token : tokens) tags.push_back(tag(token));
  return tags;
}

RuleBasedTagger::RuleBasedTagger() {
  for (const auto& p : prepositions()) prepositions_.insert(p);
  determiners_ = {"a",     "an",    "the",  "this", "that",    "these",
                  "those", "each",  "every", "some", "any",    "no",
                  "another"};
  // Auxiliaries, copulas and frequent irregular forms; regular inflections are
  // caught by the suffix rules below.
  verbs_ = {"is",    "are",   "was",   "were",  "be",     "been",   "being",
            "am",    "has",   "have",  "had",   "do",     "does",   "did",
            "can",   "could", "will",  "would", "shall",  "should", "may",
            "might", "must",  "made",  "make",  "makes",  "held",   "hold",
            "holds", "done",  "given", "give",  "gives",  "taken",  "take",
            "takes", "found", "find",  "finds", "kept",   "keep",   "keeps",
            "built", "build", "meant", "mean",  "sent",   "send",   "seen",
            "see",   "sees",  "known", "know",  "grown",  "grow",   "drawn",
            "draw",  "bought", "brought", "caught", "taught", "sold", "told",
            "paid",  "said",  "left",  "lost",  "won",    "run",    "runs",
            "eaten", "eat",   "eats",  "written", "write", "writes", "driven",
            "drive", "worn",  "wear",  "serve", "serves", "treat",  "treats",
            "remove", "removes", "develop", "develops", "contain", "contains",
            "provide", "provides", "produce", "produces", "cause",  "causes",
            "involve", "involves", "engage", "engages",  "use",    "uses",
            "drink", "drinks", "live",  "lives", "work",  "works",  "meet",
            "meets", "celebrate", "prevent", "cure",      "cook",   "cooks",
            "bake",  "bakes", "play",  "plays", "teach",  "sell",   "buy",
            "pay",   "say",   "leave", "lose",  "win",    "put",    "gets",
            "get",   "got",   "goes",  "go",    "went",   "comes",  "come",
            "came"};
  adjectives_ = {"sweet", "nice",  "good",  "bad",   "big",   "small",
                 "large", "hot",   "cold",  "new",   "old",   "fresh",
                 "tasty", "sour",  "red",   "green", "blue",  "black",
                 "white", "pretty", "long",  "short", "high",  "low",
                 "delicious"};
  adverbs_ = {"very",   "really", "quite",  "too",       "so",
              "rather", "almost", "always", "never",     "often",
              "sometimes", "usually", "daily", "together"};
}

Pos RuleBasedTagger::tag(const std::string& token) const {
  if (token.empty()) return Pos::Punct;
  bool has_alnum = std::any_of(token.begin(), token.end(), [](unsigned char c) {
    return std::isalnum(c);
  });
  if (!has_alnum) return Pos::Punct;
  bool has_digit = std::any_of(token.begin(), token.end(), [](unsigned char c) {
    return std::isdigit(c);
  });
  if (has_digit) return Pos::Other;

  if (determiners_.count(token)) return Pos::Determiner;
  if (prepositions_.count(token)) return Pos::Preposition;
  if (verbs_.count(token)) return Pos::Verb;
  if (adjectives_.count(token)) return Pos::Adjective;
  if (adverbs_.count(token)) return Pos::Adverb;

  if (ends_with(token, "ly") && token.size() > 3) return Pos::Adverb;
  if ((ends_with(token, "ed") || ends_with(token, "ing")) && token.size() > 4) {
    return Pos::Verb;
  }
  for (auto suffix : {"ous", "ful", "ive", "able", "ible", "ical"}) {
    if (ends_with(token, suffix) && token.size() > 4) return Pos::Adjective;
  }
  return Pos::Noun;
}

const std::vector<std::string>& RuleBasedTagger::prepositions() {
  static const std::vector<std::string> kPrepositions = {
      "of",      "in",      "on",      "at",      "by",      "for",
      "with",    "from",    "to",      "into",    "onto",    "over",
      "under",   "between", "among",   "through", "during",  "without",
      "within",  "against", "about",   "across",  "after",   "before",
      "behind",  "below",   "beneath", "beside",  "beyond",  "near",
      "off",     "out",     "outside", "inside",  "past",    "per",
      "since",   "toward",  "towards", "until",   "upon",    "via",
      "as"};
  return kPrepositions;
}

Lemmatizer::Lemmatizer()
    : exceptions_{{"children", "child"}, {"men", "man"},     {"women", "woman"},
                  {"feet", "foot"},      {"teeth", "tooth"}, {"mice", "mouse"},
                  {"geese", "goose"},    {"people", "person"}, {"leaves", "leaf"},
                  {"knives", "knife"},   {"wives", "wife"},  {"lives", "life"},
                  {"wolves", "wolf"},    {"thieves", "thief"}, {"shelves", "shelf"},
                  {"calves", "calf"},    {"halves", "half"}, {"loaves", "loaf"},
                  {"scarves", "scarf"}} {}

Lemmatizer::Lemmatizer(std::unordered_map<std::string, std::string> overrides)
    : Lemmatizer() {
  for (auto& [word, lemma] : overrides) exceptions_[word] = lemma;
}

std::string Lemmatizer::lemma(const std::string& word) const {
  std::string w = lowercase(word);
  auto it = exceptions_.find(w);
  if (it != exceptions_.end()) return it->second;

  auto ends = [&](std::string_view s) {
    return w.size() >= s.size() && std::string_view(w).substr(w.size() - s.size()) == s;
  };
  if (ends("ies") && w.size() > 4) return w.substr(0, w.size() - 3) + "y";
  for (auto suffix : {"sses", "ches", "shes", "xes", "zes"}) {
    if (ends(suffix)) return w.substr(0, w.size() - 2);
  }
  if (ends("ss")) return w;
  if (ends("s") && w.size() > 3) return w.substr(0, w.size() - 1);
  return w;
}

}  // namespace ncpara
