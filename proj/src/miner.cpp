#include "ncpara/miner.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <set>

#include "ncpara/errors.hpp"

namespace ncpara {

PosPattern::PosPattern(std::vector<Slot> slots) : slots_(std::move(slots)) {
  int w1_count = 0;
  int w2_count = 0;
  int w1_pos = -1;
  int w2_pos = -1;
  for (int i = 0; i < static_cast<int>(slots_.size()); ++i) {
    if (slots_[i].kind == Slot::Kind::W1) {
      ++w1_count;
      w1_pos = i;
    } else if (slots_[i].kind == Slot::Kind::W2) {
      ++w2_count;
      w2_pos = i;
    }
  }
  if (w1_count != 1 || w2_count != 1) {
    throw DataError("pattern must contain exactly one [w1] and one [w2]");
  }
  if (w2_pos > w1_pos) throw DataError("[w2] must precede [w1] in a pattern");
  if (slots_.size() > 5) throw DataError("pattern longer than 5 slots");
}

std::string PosPattern::render() const {
  std::string out;
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (i) out += ' ';
    switch (slots_[i].kind) {
      case Slot::Kind::W1: out += kW1Placeholder; break;
      case Slot::Kind::W2: out += kW2Placeholder; break;
      case Slot::Kind::PosClass: out += pos_name(slots_[i].pos); break;
    }
  }
  return out;
}

PosPattern PosPattern::parse(const std::string& text) {
  std::vector<Slot> slots;
  for (const auto& token : split_whitespace(text)) {
    Slot slot;
    if (token == kW1Placeholder) {
      slot.kind = Slot::Kind::W1;
    } else if (token == kW2Placeholder) {
      slot.kind = Slot::Kind::W2;
    } else {
      auto pos = pos_from_name(token);
      if (!pos) throw DataError("unknown POS class in pattern: " + token);
      slot.pos = *pos;
    }
    slots.push_back(slot);
  }
  return PosPattern(std::move(slots));
}

TaggedParaphrase parse_tagged_paraphrase(const std::string& line) {
  TaggedParaphrase result;
  for (const auto& token : split_whitespace(line)) {
    if (token == kW1Placeholder || token == kW2Placeholder) {
      result.tokens.push_back(token);
      result.tags.push_back(Pos::Other);
      continue;
    }
    std::size_t slash = token.rfind('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == token.size()) {
      throw DataError("expected word/POS token, got: " + token);
    }
    auto pos = pos_from_name(token.substr(slash + 1));
    if (!pos) throw DataError("unknown POS tag in: " + token);
    result.tokens.push_back(lowercase(token.substr(0, slash)));
    result.tags.push_back(*pos);
  }
  return result;
}

PatternExtraction extract_pos_patterns(const std::vector<std::string>& tagged_lines) {
  PatternExtraction out;
  for (const auto& line : tagged_lines) {
    if (split_whitespace(line).empty()) continue;
    TaggedParaphrase parsed;
    try {
      parsed = parse_tagged_paraphrase(line);
    } catch (const DataError&) {
      ++out.skipped;
      continue;
    }
    std::vector<PosPattern::Slot> slots;
    for (std::size_t i = 0; i < parsed.tokens.size(); ++i) {
      PosPattern::Slot slot;
      if (parsed.tokens[i] == kW1Placeholder) {
        slot.kind = PosPattern::Slot::Kind::W1;
      } else if (parsed.tokens[i] == kW2Placeholder) {
        slot.kind = PosPattern::Slot::Kind::W2;
      } else {
        slot.pos = parsed.tags[i];
      }
      slots.push_back(slot);
    }
    try {
      out.patterns.insert(PosPattern(std::move(slots)));
    } catch (const DataError&) {
      ++out.skipped;
    }
  }
  return out;
}

std::vector<std::string> RawHit::context_tokens() const {
  std::vector<std::string> out;
  for (const auto& token : tokens) {
    if (token != kW1Placeholder && token != kW2Placeholder) out.push_back(token);
  }
  return out;
}

std::vector<RawHit> match_ngram(const NGramRecord& ngram,
                                const std::vector<NounCompound>& compounds,
                                const std::set<PosPattern>& patterns,
                                const Tagger& tagger,
                                const Lemmatizer& lemmatizer) {
  std::vector<RawHit> hits;
  const std::size_t n = ngram.tokens.size();
  if (n < 3 || n > 5) return hits;

  std::vector<std::string> lowered(n);
  std::vector<std::string> lemmas(n);
  std::vector<Pos> tags(n);
  for (std::size_t i = 0; i < n; ++i) {
    lowered[i] = lowercase(ngram.tokens[i]);
    lemmas[i] = lemmatizer.lemma(lowered[i]);
    tags[i] = tagger.tag(lowered[i]);
  }

  for (const auto& compound : compounds) {
    for (std::size_t pos2 = 0; pos2 < n; ++pos2) {
      if (lemmas[pos2] != compound.w2) continue;
      for (std::size_t pos1 = pos2 + 1; pos1 < n; ++pos1) {
        if (lemmas[pos1] != compound.w1) continue;
        std::vector<PosPattern::Slot> slots(n);
        for (std::size_t i = 0; i < n; ++i) {
          if (i == pos1) {
            slots[i].kind = PosPattern::Slot::Kind::W1;
          } else if (i == pos2) {
            slots[i].kind = PosPattern::Slot::Kind::W2;
          } else {
            slots[i].pos = tags[i];
          }
        }
        PosPattern candidate(std::move(slots));
        if (!patterns.count(candidate)) continue;

        RawHit hit;
        hit.w2 = compound.w2;
        hit.w1 = compound.w1;
        hit.frequency = ngram.frequency;
        hit.tokens = lowered;
        hit.tokens[pos1] = kW1Placeholder;
        hit.tokens[pos2] = kW2Placeholder;
        hit.tags = tags;
        hit.tags[pos1] = Pos::Other;
        hit.tags[pos2] = Pos::Other;
        hits.push_back(std::move(hit));
      }
    }
  }
  return hits;
}

std::optional<ParaphraseTemplate> normalize_paraphrase(
    const std::vector<std::string>& tokens, const std::vector<Pos>& tags,
    const std::vector<std::string>& stop_determiners) {
  std::vector<std::string> kept;
  int content = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i] == kW1Placeholder || tokens[i] == kW2Placeholder) {
      kept.push_back(tokens[i]);
      continue;
    }
    std::string word = lowercase(tokens[i]);
    Pos pos = tags[i];
    if (pos == Pos::Punct || pos == Pos::Adjective || pos == Pos::Adverb) continue;
    if (std::find(stop_determiners.begin(), stop_determiners.end(), word) !=
        stop_determiners.end()) {
      continue;
    }
    kept.push_back(word);
    ++content;
  }
  if (content == 0) return std::nullopt;
  return ParaphraseTemplate(std::move(kept));
}

void merge_frequencies(FrequencyMap& into, const FrequencyMap& from) {
  for (const auto& [key, freq] : from) into[key] += freq;
}

std::vector<TrainingInstance> aggregate_and_weight(const FrequencyMap& frequencies,
                                                   std::uint64_t min_count) {
  std::map<std::size_t, std::uint64_t> bucket_totals;
  for (const auto& [key, freq] : frequencies) {
    if (freq < min_count) continue;
    bucket_totals[key.tmpl.size()] += freq;
  }
  std::vector<TrainingInstance> out;
  for (const auto& [key, freq] : frequencies) {
    if (freq < min_count) continue;
    TrainingInstance instance;
    instance.w2 = key.w2;
    instance.tmpl = key.tmpl;
    instance.w1 = key.w1;
    instance.score = static_cast<double>(freq) /
                     static_cast<double>(bucket_totals.at(key.tmpl.size()));
    out.push_back(std::move(instance));
  }
  // FrequencyMap iteration is already (w2, template, w1)-ordered.
  return out;
}

std::size_t round_half_up(double value) {
  return static_cast<std::size_t>(std::floor(value + 0.5));
}

const ParaphraseTemplate& unrelated_template() {
  static const ParaphraseTemplate kTemplate = ParaphraseTemplate::parse(
      std::string(kW2Placeholder) + " is unrelated to " + kW1Placeholder);
  return kTemplate;
}

namespace {

std::pair<std::string, std::string> sorted_pair(const std::string& a,
                                                const std::string& b) {
  return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

std::vector<TrainingInstance> generate_negative_samples(
    const NegativeSampleInputs& inputs, std::size_t count, double score,
    Rng& rng, int max_tries) {
  std::vector<TrainingInstance> out;
  if (count == 0) return out;
  if (inputs.vocabulary.size() < 2) {
    throw DataError("negative sampling needs at least two vocabulary words");
  }

  auto sample_word = [&]() -> const std::string& {
    return inputs.vocabulary[rng.index(inputs.vocabulary.size())];
  };

  for (std::size_t emitted = 0; emitted < count; ++emitted) {
    int shape = static_cast<int>(emitted % 3);
    if (shape == 0) {
      bool found = false;
      for (int attempt = 0; attempt < max_tries; ++attempt) {
        const std::string& a = sample_word();
        const std::string& b = sample_word();
        if (a == b) continue;
        if (inputs.cooccurring.count(sorted_pair(a, b))) continue;
        out.push_back({b, unrelated_template(), a, score});
        found = true;
        break;
      }
      if (!found) {
        throw DataError(
            "could not find a non-co-occurring word pair after " +
            std::to_string(max_tries) + " tries (vocabulary of " +
            std::to_string(inputs.vocabulary.size()) + " words, " +
            std::to_string(inputs.cooccurring.size()) + " co-occurring pairs)");
      }
    } else {
      if (inputs.templates.empty()) {
        throw DataError("negative sampling needs at least one positive template");
      }
      bool found = false;
      for (int attempt = 0; attempt < max_tries; ++attempt) {
        std::size_t t = rng.index(inputs.templates.size());
        const std::string& w = sample_word();
        if (inputs.observed_words[t].count(w)) continue;
        if (shape == 1) {
          out.push_back({w, inputs.templates[t], kUnkWord, score});
        } else {
          out.push_back({kUnkWord, inputs.templates[t], w, score});
        }
        found = true;
        break;
      }
      if (!found) {
        throw DataError("could not find an unseen (word, template) pair after " +
                        std::to_string(max_tries) + " tries");
      }
    }
  }
  return out;
}

namespace {

struct ShardResult {
  FrequencyMap frequencies;
  std::set<std::pair<std::string, std::string>> cooccurring;
  std::size_t ngrams = 0;
  std::size_t raw_hits = 0;
};

ShardResult process_shard(const std::vector<NGramRecord>& shard,
                          const std::vector<NounCompound>& compounds,
                          const std::set<PosPattern>& patterns,
                          const Tagger& tagger, const Lemmatizer& lemmatizer,
                          const MinerConfig& config) {
  ShardResult result;
  for (const auto& ngram : shard) {
    ++result.ngrams;
    const int n = static_cast<int>(ngram.tokens.size());
    if (n < config.min_ngram_len || n > config.max_ngram_len) continue;

    std::vector<std::string> lemmas;
    lemmas.reserve(ngram.tokens.size());
    for (const auto& token : ngram.tokens) {
      lemmas.push_back(lemmatizer.lemma(lowercase(token)));
    }
    for (std::size_t i = 0; i < lemmas.size(); ++i) {
      for (std::size_t j = i + 1; j < lemmas.size(); ++j) {
        if (lemmas[i] != lemmas[j]) {
          result.cooccurring.insert(sorted_pair(lemmas[i], lemmas[j]));
        }
      }
    }

    auto hits = match_ngram(ngram, compounds, patterns, tagger, lemmatizer);
    result.raw_hits += hits.size();
    // An n-gram contributes its frequency once per distinct normalized tuple.
    std::set<TupleKey> seen;
    for (const auto& hit : hits) {
      auto tmpl = normalize_paraphrase(hit.tokens, hit.tags, config.determiners);
      if (!tmpl) continue;
      TupleKey key{hit.w2, *tmpl, hit.w1};
      if (!seen.insert(key).second) continue;
      result.frequencies[key] += hit.frequency;
    }
  }
  return result;
}

}  // namespace

MiningResult mine_shards(const std::vector<std::vector<NGramRecord>>& shards,
                         const std::vector<NounCompound>& compounds,
                         const std::set<PosPattern>& patterns,
                         const Tagger& tagger, const Lemmatizer& lemmatizer,
                         const MinerConfig& config) {
  MiningResult result;

  std::vector<ShardResult> shard_results(shards.size());
  if (config.threads > 1 && shards.size() > 1) {
    std::vector<std::future<ShardResult>> futures;
    futures.reserve(shards.size());
    for (const auto& shard : shards) {
      futures.push_back(std::async(std::launch::async, [&]() {
        return process_shard(shard, compounds, patterns, tagger, lemmatizer,
                             config);
      }));
    }
    for (std::size_t i = 0; i < futures.size(); ++i) {
      shard_results[i] = futures[i].get();
    }
  } else {
    for (std::size_t i = 0; i < shards.size(); ++i) {
      shard_results[i] = process_shard(shards[i], compounds, patterns, tagger,
                                       lemmatizer, config);
    }
  }

  FrequencyMap merged;
  std::set<std::pair<std::string, std::string>> cooccurring;
  for (const auto& shard : shard_results) {
    merge_frequencies(merged, shard.frequencies);
    cooccurring.insert(shard.cooccurring.begin(), shard.cooccurring.end());
    result.stats.ngrams_read += shard.ngrams;
    result.stats.raw_hits += shard.raw_hits;
  }
  result.stats.tuples_before_min_count = merged.size();

  result.instances = aggregate_and_weight(merged, config.min_count);
  result.stats.positives = result.instances.size();
  for (const auto& instance : result.instances) {
    ++result.stats.bucket_sizes[instance.tmpl.size()];
  }

  std::size_t negative_count =
      round_half_up(config.negative_ratio *
                    static_cast<double>(result.instances.size()));
  if (negative_count > 0) {
    double s_n = config.negative_score;
    if (s_n <= 0.0) {
      std::vector<double> scores;
      scores.reserve(result.instances.size());
      for (const auto& instance : result.instances) scores.push_back(instance.score);
      std::sort(scores.begin(), scores.end());
      std::size_t m = scores.size();
      s_n = (m % 2 == 1) ? scores[m / 2]
                         : 0.5 * (scores[m / 2 - 1] + scores[m / 2]);
    }

    NegativeSampleInputs inputs;
    inputs.cooccurring = std::move(cooccurring);
    std::set<std::string> vocab_set;
    std::map<ParaphraseTemplate, std::set<std::string>> observed;
    for (const auto& instance : result.instances) {
      vocab_set.insert(instance.w1);
      vocab_set.insert(instance.w2);
      observed[instance.tmpl].insert(instance.w1);
      observed[instance.tmpl].insert(instance.w2);
    }
    inputs.vocabulary.assign(vocab_set.begin(), vocab_set.end());
    for (auto& [tmpl, words] : observed) {
      inputs.templates.push_back(tmpl);
      inputs.observed_words.push_back(std::move(words));
    }

    Rng rng(config.seed);
    auto negatives = generate_negative_samples(inputs, negative_count, s_n, rng,
                                               config.max_tries);
    result.stats.negatives = negatives.size();
    for (auto& instance : negatives) result.instances.push_back(std::move(instance));
  }

  return result;
}

}  // namespace ncpara
