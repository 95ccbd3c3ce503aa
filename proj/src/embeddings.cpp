#include "ncpara/embeddings.hpp"

#include <fstream>
#include <sstream>

#include "ncpara/errors.hpp"
#include "ncpara/types.hpp"

namespace ncpara {

EmbeddingTable EmbeddingTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open embedding file: " + path);

  std::vector<std::pair<std::string, std::vector<double>>> rows;
  std::string line;
  int dim = -1;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string word;
    fields >> word;
    std::vector<double> values;
    double v;
    while (fields >> v) values.push_back(v);
    if (values.empty()) {
      throw DataError("embedding line " + std::to_string(line_no) +
                      " has no values: " + path);
    }
    if (dim < 0) {
      dim = static_cast<int>(values.size());
    } else if (static_cast<int>(values.size()) != dim) {
      throw DataError("embedding dimension mismatch at line " +
                      std::to_string(line_no) + ": " + path);
    }
    if (word == kUnkWord) continue;  // the unknown word never has a fixed vector
    rows.emplace_back(std::move(word), std::move(values));
  }
  if (rows.empty()) throw DataError("embedding file is empty: " + path);

  EmbeddingTable table;
  table.dim_ = dim;
  table.matrix_.resize(dim, static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (table.index_.count(rows[i].first)) {
      throw DataError("duplicate word in embedding file: " + rows[i].first);
    }
    table.index_[rows[i].first] = static_cast<int>(i);
    table.words_.push_back(rows[i].first);
    for (int j = 0; j < dim; ++j) {
      table.matrix_(j, static_cast<Eigen::Index>(i)) = rows[i].second[j];
    }
  }
  return table;
}

EmbeddingTable EmbeddingTable::from_pairs(
    int dim, const std::vector<std::pair<std::string, Eigen::VectorXd>>& pairs) {
  EmbeddingTable table;
  table.dim_ = dim;
  table.matrix_.resize(dim, static_cast<Eigen::Index>(pairs.size()));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].second.size() != dim) {
      throw DataError("embedding vector dimension mismatch for: " + pairs[i].first);
    }
    if (table.index_.count(pairs[i].first)) {
      throw DataError("duplicate word: " + pairs[i].first);
    }
    table.index_[pairs[i].first] = static_cast<int>(i);
    table.words_.push_back(pairs[i].first);
    table.matrix_.col(static_cast<Eigen::Index>(i)) = pairs[i].second;
  }
  return table;
}

std::optional<int> EmbeddingTable::find(const std::string& word) const {
  auto it = index_.find(word);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace ncpara
