#ifndef NCPARA_EMBEDDINGS_HPP
#define NCPARA_EMBEDDINGS_HPP

#include <Eigen/Core>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ncpara {

// Pre-trained word vectors loaded from a "word v1 ... vd" text file.
// Column i holds the vector of words()[i]; file order is preserved.
class EmbeddingTable {
 public:
  static EmbeddingTable load(const std::string& path);  // throws DataError

  // Builds a table directly from (word, vector) pairs; used by fixtures.
  static EmbeddingTable from_pairs(
      int dim, const std::vector<std::pair<std::string, Eigen::VectorXd>>& pairs);

  int dim() const { return dim_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<std::string>& words() const { return words_; }
  std::optional<int> find(const std::string& word) const;
  Eigen::VectorXd vector_of(int index) const { return matrix_.col(index); }
  const Eigen::MatrixXd& matrix() const { return matrix_; }

  // The vector used for out-of-vocabulary words in model-independent feature
  // construction.
  Eigen::VectorXd unk_vector() const { return Eigen::VectorXd::Zero(dim_); }

 private:
  int dim_ = 0;
  std::vector<std::string> words_;
  std::unordered_map<std::string, int> index_;
  Eigen::MatrixXd matrix_;  // dim x size
};

}  // namespace ncpara

#endif
