#include "ncpara/io.hpp"

#include <fstream>

#include "ncpara/errors.hpp"
#include "ncpara/pos.hpp"

namespace ncpara {

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open file: " + path);
  return in;
}

double parse_double(const std::string& text, const std::string& path,
                    std::size_t line_no) {
  try {
    std::size_t used = 0;
    double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw DataError("bad number '" + text + "' at " + path + ":" +
                    std::to_string(line_no));
  }
}

}  // namespace

std::vector<NGramRecord> read_ngram_shard(const std::string& path) {
  auto in = open_or_throw(path);
  std::vector<NGramRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto fields = split_tab(line);
    if (fields.size() != 2) {
      throw DataError("expected 'tokens<TAB>frequency' at " + path + ":" +
                      std::to_string(line_no));
    }
    NGramRecord record;
    record.tokens = split_whitespace(fields[0]);
    double freq = parse_double(fields[1], path, line_no);
    if (freq < 1) {
      throw DataError("n-gram frequency must be >= 1 at " + path + ":" +
                      std::to_string(line_no));
    }
    record.frequency = static_cast<std::uint64_t>(freq);
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<NounCompound> read_compounds(const std::string& path) {
  auto in = open_or_throw(path);
  std::vector<NounCompound> compounds;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto fields = split_tab(line);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw DataError("expected 'w1<TAB>w2' at " + path + ":" +
                      std::to_string(line_no));
    }
    compounds.push_back({lowercase(fields[0]), lowercase(fields[1])});
  }
  return compounds;
}

std::vector<std::string> read_lines(const std::string& path) {
  auto in = open_or_throw(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

void write_training_set(const std::string& path,
                        const std::vector<TrainingInstance>& instances) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write file: " + path);
  for (const auto& instance : instances) {
    out << instance.w2 << '\t' << instance.tmpl.render() << '\t' << instance.w1
        << '\t' << format_double(instance.score) << '\n';
  }
}

std::vector<TrainingInstance> read_training_set(const std::string& path) {
  auto in = open_or_throw(path);
  std::vector<TrainingInstance> instances;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto fields = split_tab(line);
    if (fields.size() != 4) {
      throw DataError("expected 'w2<TAB>template<TAB>w1<TAB>score' at " + path +
                      ":" + std::to_string(line_no));
    }
    TrainingInstance instance;
    instance.w2 = fields[0];
    instance.tmpl = ParaphraseTemplate::parse(fields[1]);
    instance.w1 = fields[2];
    instance.score = parse_double(fields[3], path, line_no);
    if (instance.score <= 0) {
      throw DataError("instance score must be positive at " + path + ":" +
                      std::to_string(line_no));
    }
    instances.push_back(std::move(instance));
  }
  return instances;
}

std::vector<LabeledCompound> read_labeled_dataset(const std::string& path) {
  auto in = open_or_throw(path);
  std::vector<LabeledCompound> dataset;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto fields = split_tab(line);
    if (fields.size() != 3) {
      throw DataError("expected 'w1<TAB>w2<TAB>label' at " + path + ":" +
                      std::to_string(line_no));
    }
    dataset.push_back({lowercase(fields[0]), lowercase(fields[1]), fields[2]});
  }
  return dataset;
}

RankedListMap read_ranked_lists(const std::string& path) {
  auto in = open_or_throw(path);
  RankedListMap lists;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto fields = split_tab(line);
    if (fields.size() != 4) {
      throw DataError("expected 'w1<TAB>w2<TAB>paraphrase<TAB>score' at " +
                      path + ":" + std::to_string(line_no));
    }
    NounCompound nc{lowercase(fields[0]), lowercase(fields[1])};
    lists[nc].push_back({fields[2], parse_double(fields[3], path, line_no)});
  }
  return lists;
}

void write_ranked_lists(const std::string& path, const RankedListMap& lists) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write file: " + path);
  for (const auto& [nc, entries] : lists) {
    for (const auto& entry : entries) {
      out << nc.w1 << '\t' << nc.w2 << '\t' << entry.paraphrase << '\t'
          << format_double(entry.score) << '\n';
    }
  }
}

}  // namespace ncpara
