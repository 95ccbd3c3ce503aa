#ifndef NCPARA_MODEL_HPP
#define NCPARA_MODEL_HPP

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ncpara/embeddings.hpp"
#include "ncpara/types.hpp"
#include "ncpara/vocab.hpp"

namespace ncpara {

struct ModelConfig {
  int dim = 100;                // d; embedding and per-direction hidden size
  double learning_rate = 0.01;
  double momentum = 0.9;
  int batch_size = 10;
  int max_epochs = 10;
  int patience = 3;
  double init_range = 0.1;      // uniform [-r, r] for learned parameters
  std::uint64_t seed = 42;
};

// One LSTM direction; rows of the stacked matrices are the input, forget,
// cell and output gate blocks, in that order.
struct LstmDirection {
  Eigen::MatrixXd w_in;   // 4d x d
  Eigen::MatrixXd w_rec;  // 4d x d
  Eigen::VectorXd bias;   // 4d
};

// Gradient (or velocity) storage mirroring every learned parameter.
struct Gradients {
  Eigen::VectorXd unk;        // d
  Eigen::MatrixXd specials;   // d x 3
  LstmDirection fwd;
  LstmDirection bwd;
  Eigen::MatrixXd w_word;     // |V_w| x 2d
  Eigen::MatrixXd w_par;      // |V_p| x 2d
};

enum class PredictionTarget { Paraphrase, W1, W2 };

struct PredictionDistribution {
  PredictionTarget target = PredictionTarget::Paraphrase;
  Eigen::VectorXd probs;
};

// Top-k indices by probability, ties broken by ascending index. Throws
// UsageError when k is out of [1, |probs|].
std::vector<std::pair<int, double>> argmax_k(const Eigen::VectorXd& probs, int k);

double cross_entropy(const Eigen::VectorXd& probs, int gold);

// Early-stopping bookkeeping on validation loss.
class EarlyStopper {
 public:
  explicit EarlyStopper(int patience) : patience_(patience) {}

  struct Decision {
    bool improved = false;
    bool stop = false;
  };
  Decision observe(double val_loss);
  int best_epoch() const { return best_epoch_; }  // 1-based

 private:
  int patience_;
  double best_ = 0.0;
  int best_epoch_ = 0;
  int epoch_ = 0;
};

struct TrainReport {
  std::vector<double> train_losses;  // per-epoch mean instance loss
  std::vector<double> val_losses;
  int best_epoch = 0;    // 1-based epoch whose parameters were kept
  int stopped_epoch = 0;
};

// The multi-task sequence model: a single-layer bidirectional LSTM encoder
// over word/placeholder embeddings, with a paraphrase head W_p and a word
// head W_w shared by the w1 and w2 subtasks. Pre-trained word embeddings are
// fixed; only <unk>, the three placeholder embeddings, the encoder and the
// two heads are trained.
//
// Inference (encode_*, predict_*, loss) is const and safe to call from
// concurrent threads; train() is single-threaded and deterministic per seed.
class Model {
 public:
  Model(Vocabulary vocab, const EmbeddingTable& table, ModelConfig config);

  const Vocabulary& vocab() const { return vocab_; }
  const ModelConfig& config() const { return config_; }
  int dim() const { return config_.dim; }
  int output_dim() const { return 2 * config_.dim; }

  // Encoder output (forward ++ backward concatenation) at the placeholder
  // position of left ++ placeholder ++ right.
  Eigen::VectorXd encode_with_placeholder(const std::vector<Token>& left,
                                          SpecialToken placeholder,
                                          const std::vector<Token>& right) const;
  Eigen::VectorXd encode_sequence_at(const std::vector<Token>& tokens, int pos) const;

  // Mean-pooled encoder outputs over the template's full token sequence.
  Eigen::VectorXd encode_template(const ParaphraseTemplate& tmpl) const;

  // Encoder output at the [p] slot of "w2 [p] w1"; the compound-side vector
  // of the paraphrase subtask and of the re-ranker's guided-score feature.
  Eigen::VectorXd compound_slot_encoding(const std::string& w1,
                                         const std::string& w2) const;

  PredictionDistribution predict_paraphrase(const std::string& w1,
                                            const std::string& w2) const;
  PredictionDistribution predict_w1(const std::string& w2,
                                    const ParaphraseTemplate& tmpl) const;
  PredictionDistribution predict_w2(const ParaphraseTemplate& tmpl,
                                    const std::string& w1) const;

  // Score-weighted sum of the three subtask cross-entropies.
  double loss(const TrainingInstance& instance) const;

  Gradients zero_gradients() const;
  // Adds this instance's analytic gradients into `grads`; returns its loss.
  double accumulate_gradients(const TrainingInstance& instance, Gradients& grads) const;

  TrainReport train(const std::vector<TrainingInstance>& train_set,
                    const std::vector<TrainingInstance>& val_set,
                    std::ostream* log = nullptr);

  struct ParamView {
    std::string name;
    double* data;
    std::ptrdiff_t size;
  };
  std::vector<ParamView> learned_parameters();
  static std::vector<ParamView> views_of(Gradients& grads);

  const Eigen::MatrixXd& fixed_embeddings() const { return fixed_; }
  const Eigen::MatrixXd& word_head() const { return w_word_; }
  const Eigen::MatrixXd& paraphrase_head() const { return w_par_; }

  void save(const std::string& path) const;
  static Model load(const std::string& path);

  std::vector<Token> template_tokens(const ParaphraseTemplate& tmpl,
                                     const std::string* w1_word,
                                     const std::string* w2_word) const;

 private:
  Model() = default;

  struct DirectionTrace {
    std::vector<Eigen::VectorXd> gate_i, gate_f, gate_g, gate_o;
    std::vector<Eigen::VectorXd> cell, tanh_cell, hidden;
  };
  struct SequenceTrace {
    std::vector<Eigen::VectorXd> inputs;  // embeddings, original positions
    DirectionTrace fwd;                   // scan step s = position s
    DirectionTrace bwd;                   // scan step s = position T-1-s
  };

  Eigen::VectorXd embedding_of(const Token& token) const;
  DirectionTrace run_direction(const LstmDirection& params,
                               const std::vector<Eigen::VectorXd>& inputs,
                               bool reverse) const;
  SequenceTrace run_encoder(const std::vector<Token>& tokens) const;
  Eigen::VectorXd trace_output(const SequenceTrace& trace, int pos) const;
  void backprop_direction(const LstmDirection& params, const DirectionTrace& trace,
                          const std::vector<Eigen::VectorXd>& inputs, bool reverse,
                          int scan_step, Eigen::VectorXd d_hidden,
                          LstmDirection& grads,
                          std::vector<Eigen::VectorXd>& d_inputs) const;
  void backprop_sequence(const std::vector<Token>& tokens, const SequenceTrace& trace,
                         int pos, const Eigen::VectorXd& d_output,
                         Gradients& grads) const;

  struct Snapshot {
    Eigen::VectorXd unk;
    Eigen::MatrixXd specials;
    LstmDirection fwd, bwd;
    Eigen::MatrixXd w_word, w_par;
  };
  Snapshot snapshot() const;
  void restore(const Snapshot& snap);

  Vocabulary vocab_;
  ModelConfig config_;
  Eigen::MatrixXd fixed_;     // d x |V_w|; column 0 unused, columns fixed
  Eigen::VectorXd unk_;       // learned <unk> embedding
  Eigen::MatrixXd specials_;  // d x 3, learned placeholder embeddings
  LstmDirection fwd_, bwd_;
  Eigen::MatrixXd w_word_;    // |V_w| x 2d, shared by the w1/w2 subtasks
  Eigen::MatrixXd w_par_;     // |V_p| x 2d
};

}  // namespace ncpara

#endif
