#ifndef NCPARA_MINER_HPP
#define NCPARA_MINER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ncpara/pos.hpp"
#include "ncpara/rng.hpp"
#include "ncpara/types.hpp"

namespace ncpara {

// A part-of-speech template: each slot is either one of the two placeholders
// or a POS-class constraint. Matching an n-gram is exact per position.
class PosPattern {
 public:
  struct Slot {
    enum class Kind : std::uint8_t { PosClass, W1, W2 };
    Kind kind = Kind::PosClass;
    Pos pos = Pos::Noun;

    auto operator<=>(const Slot&) const = default;
  };

  PosPattern() = default;
  explicit PosPattern(std::vector<Slot> slots);  // throws DataError on bad shape

  const std::vector<Slot>& slots() const { return slots_; }
  std::size_t size() const { return slots_.size(); }
  std::string render() const;                       // e.g. "[w2] VERB PREP [w1]"
  static PosPattern parse(const std::string& text);  // throws DataError

  bool operator==(const PosPattern& other) const { return slots_ == other.slots_; }
  bool operator<(const PosPattern& other) const { return slots_ < other.slots_; }

 private:
  std::vector<Slot> slots_;
};

// A gold paraphrase line with its placeholders and POS tags, e.g.
//   "[w2] made/VERB of/PREP [w1]"
struct TaggedParaphrase {
  std::vector<std::string> tokens;  // placeholders kept verbatim
  std::vector<Pos> tags;            // parallel; placeholder positions are Pos::Other
};

TaggedParaphrase parse_tagged_paraphrase(const std::string& line);  // throws DataError

struct PatternExtraction {
  std::set<PosPattern> patterns;
  int skipped = 0;  // inputs missing a placeholder or otherwise out of shape
};

PatternExtraction extract_pos_patterns(const std::vector<std::string>& tagged_lines);

// An n-gram that matched a pattern for one compound: the full token sequence
// with the constituent positions replaced by placeholders, plus parallel tags.
struct RawHit {
  std::string w2;
  std::vector<std::string> tokens;
  std::vector<Pos> tags;
  std::string w1;
  std::uint64_t frequency = 0;

  // Convenience for inspection: the non-placeholder tokens.
  std::vector<std::string> context_tokens() const;
};

// All pattern matches of one n-gram against the compound set. One hit per
// (compound, placeholder placement) that matches some pattern.
std::vector<RawHit> match_ngram(const NGramRecord& ngram,
                                const std::vector<NounCompound>& compounds,
                                const std::set<PosPattern>& patterns,
                                const Tagger& tagger,
                                const Lemmatizer& lemmatizer);

// Strips punctuation, adjectives, adverbs and the configured determiners,
// lowercases what remains. Returns nullopt when nothing but the placeholders
// survives (the degenerate "[w2] [w1]" case).
std::optional<ParaphraseTemplate> normalize_paraphrase(
    const std::vector<std::string>& tokens, const std::vector<Pos>& tags,
    const std::vector<std::string>& stop_determiners);

// Frequency map keyed by the normalized tuple; mergeable across shards.
struct TupleKey {
  std::string w2;
  ParaphraseTemplate tmpl;
  std::string w1;

  bool operator<(const TupleKey& other) const {
    if (w2 != other.w2) return w2 < other.w2;
    if (!(tmpl == other.tmpl)) return tmpl < other.tmpl;
    return w1 < other.w1;
  }
  bool operator==(const TupleKey& other) const {
    return w2 == other.w2 && tmpl == other.tmpl && w1 == other.w1;
  }
};

using FrequencyMap = std::map<TupleKey, std::uint64_t>;

void merge_frequencies(FrequencyMap& into, const FrequencyMap& from);

// Drops tuples below min_count, then normalizes frequencies per template
// length so that each length bucket forms a distribution. Output is sorted by
// (w2, template, w1).
std::vector<TrainingInstance> aggregate_and_weight(const FrequencyMap& frequencies,
                                                   std::uint64_t min_count);

struct NegativeSampleInputs {
  std::vector<std::string> vocabulary;             // candidate words, sorted
  std::set<std::pair<std::string, std::string>> cooccurring;  // unordered pairs, stored sorted
  std::vector<ParaphraseTemplate> templates;       // observed positive templates
  // words observed with each template (either slot), aligned with `templates`
  std::vector<std::set<std::string>> observed_words;
};

// Emits `count` negatives cycling through the three shapes: an unrelated word
// pair under the dedicated template, and (word, template, <unk>) /
// (<unk>, template, word) for a word unseen with that template.
std::vector<TrainingInstance> generate_negative_samples(
    const NegativeSampleInputs& inputs, std::size_t count, double score,
    Rng& rng, int max_tries = 1000);

std::size_t round_half_up(double value);

const ParaphraseTemplate& unrelated_template();

struct MinerConfig {
  std::uint64_t min_count = 5;
  int max_ngram_len = 5;
  int min_ngram_len = 3;
  double negative_ratio = 0.01;
  // Negative instance score; values <= 0 mean "median positive score".
  double negative_score = -1.0;
  std::vector<std::string> determiners = {"a", "an", "the"};
  int max_tries = 1000;
  std::uint64_t seed = 42;
  int threads = 1;
};

struct MiningStats {
  std::size_t ngrams_read = 0;
  std::size_t raw_hits = 0;
  std::size_t tuples_before_min_count = 0;
  std::size_t positives = 0;
  std::size_t negatives = 0;
  std::map<std::size_t, std::size_t> bucket_sizes;  // template length -> count
};

struct MiningResult {
  std::vector<TrainingInstance> instances;  // positives (sorted) then negatives
  MiningStats stats;
};

// Full pipeline over in-memory shards: match + normalize each record, merge
// frequency maps, weight, then append negatives. Shards may be processed on
// `config.threads` workers; the merge is commutative so any schedule yields
// identical output.
MiningResult mine_shards(const std::vector<std::vector<NGramRecord>>& shards,
                         const std::vector<NounCompound>& compounds,
                         const std::set<PosPattern>& patterns,
                         const Tagger& tagger, const Lemmatizer& lemmatizer,
                         const MinerConfig& config);

}  // namespace ncpara

#endif
