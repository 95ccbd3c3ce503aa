#ifndef NCPARA_IO_HPP
#define NCPARA_IO_HPP

#include <map>
#include <string>
#include <vector>

#include "ncpara/types.hpp"

namespace ncpara {

// One "token token ... <TAB> frequency" record per line; shards concatenable.
std::vector<NGramRecord> read_ngram_shard(const std::string& path);

// One "w1 <TAB> w2" compound per line.
std::vector<NounCompound> read_compounds(const std::string& path);

std::vector<std::string> read_lines(const std::string& path);

// Training set: "w2 <TAB> template <TAB> w1 <TAB> score" per line.
void write_training_set(const std::string& path,
                        const std::vector<TrainingInstance>& instances);
std::vector<TrainingInstance> read_training_set(const std::string& path);

// Classification dataset: "w1 <TAB> w2 <TAB> label" per line.
std::vector<LabeledCompound> read_labeled_dataset(const std::string& path);

struct PredictionEntry {
  std::string paraphrase;
  double score = 0.0;
};
// Ranked predictions / gold lists: "w1 <TAB> w2 <TAB> paraphrase <TAB> score".
// List order is file order.
using RankedListMap = std::map<NounCompound, std::vector<PredictionEntry>>;

RankedListMap read_ranked_lists(const std::string& path);
void write_ranked_lists(const std::string& path, const RankedListMap& lists);

}  // namespace ncpara

#endif
