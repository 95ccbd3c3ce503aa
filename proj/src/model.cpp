#include "ncpara/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ncpara/errors.hpp"
#include "ncpara/rng.hpp"

namespace ncpara {

namespace {

Eigen::VectorXd sigmoid(const Eigen::VectorXd& x) {
  return x.unaryExpr([](double v) { return 1.0 / (1.0 + std::exp(-v)); });
}

Eigen::VectorXd softmax(const Eigen::VectorXd& logits) {
  double max = logits.maxCoeff();
  Eigen::VectorXd exps = (logits.array() - max).exp();
  return exps / exps.sum();
}

double log_sum_exp(const Eigen::VectorXd& logits) {
  double max = logits.maxCoeff();
  return max + std::log((logits.array() - max).exp().sum());
}

nlohmann::json config_to_json(const ModelConfig& c) {
  return nlohmann::json{{"dim", c.dim},
                        {"learning_rate", c.learning_rate},
                        {"momentum", c.momentum},
                        {"batch_size", c.batch_size},
                        {"max_epochs", c.max_epochs},
                        {"patience", c.patience},
                        {"init_range", c.init_range},
                        {"seed", c.seed}};
}

ModelConfig config_from_json(const nlohmann::json& j) {
  ModelConfig c;
  c.dim = j.at("dim").get<int>();
  c.learning_rate = j.at("learning_rate").get<double>();
  c.momentum = j.at("momentum").get<double>();
  c.batch_size = j.at("batch_size").get<int>();
  c.max_epochs = j.at("max_epochs").get<int>();
  c.patience = j.at("patience").get<int>();
  c.init_range = j.at("init_range").get<double>();
  c.seed = j.at("seed").get<std::uint64_t>();
  return c;
}

}  // namespace

std::vector<std::pair<int, double>> argmax_k(const Eigen::VectorXd& probs, int k) {
  const int n = static_cast<int>(probs.size());
  if (k < 1 || k > n) {
    throw UsageError("k must be in [1, " + std::to_string(n) + "], got " +
                     std::to_string(k));
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  auto better = [&](int a, int b) {
    if (probs[a] != probs[b]) return probs[a] > probs[b];
    return a < b;
  };
  std::partial_sort(order.begin(), order.begin() + k, order.end(), better);
  std::vector<std::pair<int, double>> out;
  out.reserve(k);
  for (int i = 0; i < k; ++i) out.emplace_back(order[i], probs[order[i]]);
  return out;
}

double cross_entropy(const Eigen::VectorXd& probs, int gold) {
  return -std::log(probs[gold]);
}

EarlyStopper::Decision EarlyStopper::observe(double val_loss) {
  ++epoch_;
  Decision decision;
  if (best_epoch_ == 0 || val_loss < best_) {
    best_ = val_loss;
    best_epoch_ = epoch_;
    decision.improved = true;
  }
  decision.stop = (epoch_ - best_epoch_) >= patience_;
  return decision;
}

Model::Model(Vocabulary vocab, const EmbeddingTable& table, ModelConfig config)
    : vocab_(std::move(vocab)), config_(config) {
  if (table.dim() != config_.dim) {
    throw DataError("embedding dimension " + std::to_string(table.dim()) +
                    " does not match configured dim " +
                    std::to_string(config_.dim));
  }
  const int d = config_.dim;
  const int vw = vocab_.word_count();
  const int vp = vocab_.template_count();
  if (vp == 0) throw DataError("paraphrase vocabulary is empty");

  fixed_ = Eigen::MatrixXd::Zero(d, vw);
  for (int id = 1; id < vw; ++id) {
    auto col = table.find(vocab_.word(id));
    if (!col) {
      throw DataError("vocabulary word missing from embedding table: " +
                      vocab_.word(id));
    }
    fixed_.col(id) = table.vector_of(*col);
  }

  unk_ = Eigen::VectorXd::Zero(d);
  specials_ = Eigen::MatrixXd::Zero(d, kSpecialCount);
  fwd_.w_in = Eigen::MatrixXd::Zero(4 * d, d);
  fwd_.w_rec = Eigen::MatrixXd::Zero(4 * d, d);
  fwd_.bias = Eigen::VectorXd::Zero(4 * d);
  bwd_ = fwd_;
  w_word_ = Eigen::MatrixXd::Zero(vw, 2 * d);
  w_par_ = Eigen::MatrixXd::Zero(vp, 2 * d);

  Rng rng(config_.seed);
  for (auto& view : learned_parameters()) {
    for (std::ptrdiff_t i = 0; i < view.size; ++i) {
      view.data[i] = rng.uniform(-config_.init_range, config_.init_range);
    }
  }
}

Eigen::VectorXd Model::embedding_of(const Token& token) const {
  if (token.special) return specials_.col(token.id);
  if (token.id == Vocabulary::kUnkId) return unk_;
  return fixed_.col(token.id);
}

Model::DirectionTrace Model::run_direction(const LstmDirection& params,
                                           const std::vector<Eigen::VectorXd>& inputs,
                                           bool reverse) const {
  const int d = config_.dim;
  const int T = static_cast<int>(inputs.size());
  DirectionTrace trace;
  trace.gate_i.resize(T);
  trace.gate_f.resize(T);
  trace.gate_g.resize(T);
  trace.gate_o.resize(T);
  trace.cell.resize(T);
  trace.tanh_cell.resize(T);
  trace.hidden.resize(T);

  Eigen::VectorXd h = Eigen::VectorXd::Zero(d);
  Eigen::VectorXd c = Eigen::VectorXd::Zero(d);
  for (int s = 0; s < T; ++s) {
    const int pos = reverse ? T - 1 - s : s;
    Eigen::VectorXd z = params.w_in * inputs[pos] + params.w_rec * h + params.bias;
    trace.gate_i[s] = sigmoid(z.segment(0, d));
    trace.gate_f[s] = sigmoid(z.segment(d, d));
    trace.gate_g[s] = z.segment(2 * d, d).array().tanh();
    trace.gate_o[s] = sigmoid(z.segment(3 * d, d));
    c = trace.gate_f[s].cwiseProduct(c) + trace.gate_i[s].cwiseProduct(trace.gate_g[s]);
    trace.cell[s] = c;
    trace.tanh_cell[s] = c.array().tanh();
    h = trace.gate_o[s].cwiseProduct(trace.tanh_cell[s]);
    trace.hidden[s] = h;
  }
  return trace;
}

Model::SequenceTrace Model::run_encoder(const std::vector<Token>& tokens) const {
  if (tokens.empty()) throw DataError("cannot encode an empty sequence");
  SequenceTrace trace;
  trace.inputs.reserve(tokens.size());
  for (const auto& token : tokens) trace.inputs.push_back(embedding_of(token));
  trace.fwd = run_direction(fwd_, trace.inputs, false);
  trace.bwd = run_direction(bwd_, trace.inputs, true);
  return trace;
}

Eigen::VectorXd Model::trace_output(const SequenceTrace& trace, int pos) const {
  const int d = config_.dim;
  const int T = static_cast<int>(trace.inputs.size());
  Eigen::VectorXd out(2 * d);
  out.head(d) = trace.fwd.hidden[pos];
  out.tail(d) = trace.bwd.hidden[T - 1 - pos];
  return out;
}

Eigen::VectorXd Model::encode_sequence_at(const std::vector<Token>& tokens,
                                          int pos) const {
  if (pos < 0 || pos >= static_cast<int>(tokens.size())) {
    throw DataError("encode position out of range");
  }
  return trace_output(run_encoder(tokens), pos);
}

Eigen::VectorXd Model::encode_with_placeholder(const std::vector<Token>& left,
                                               SpecialToken placeholder,
                                               const std::vector<Token>& right) const {
  std::vector<Token> tokens;
  tokens.reserve(left.size() + right.size() + 1);
  tokens.insert(tokens.end(), left.begin(), left.end());
  tokens.push_back(Token::placeholder(placeholder));
  tokens.insert(tokens.end(), right.begin(), right.end());
  return encode_sequence_at(tokens, static_cast<int>(left.size()));
}

std::vector<Token> Model::template_tokens(const ParaphraseTemplate& tmpl,
                                          const std::string* w1_word,
                                          const std::string* w2_word) const {
  std::vector<Token> tokens;
  tokens.reserve(tmpl.size());
  for (const auto& surface : tmpl.tokens()) {
    if (surface == kW1Placeholder && w1_word) {
      tokens.push_back(Token::word(vocab_.word_id(*w1_word)));
    } else if (surface == kW2Placeholder && w2_word) {
      tokens.push_back(Token::word(vocab_.word_id(*w2_word)));
    } else {
      tokens.push_back(vocab_.token_of(surface));
    }
  }
  return tokens;
}

Eigen::VectorXd Model::encode_template(const ParaphraseTemplate& tmpl) const {
  auto tokens = template_tokens(tmpl, nullptr, nullptr);
  auto trace = run_encoder(tokens);
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(output_dim());
  for (int pos = 0; pos < static_cast<int>(tokens.size()); ++pos) {
    mean += trace_output(trace, pos);
  }
  return mean / static_cast<double>(tokens.size());
}

Eigen::VectorXd Model::compound_slot_encoding(const std::string& w1,
                                              const std::string& w2) const {
  return encode_with_placeholder({Token::word(vocab_.word_id(w2))}, SpecialToken::P,
                                 {Token::word(vocab_.word_id(w1))});
}

PredictionDistribution Model::predict_paraphrase(const std::string& w1,
                                                 const std::string& w2) const {
  PredictionDistribution dist;
  dist.target = PredictionTarget::Paraphrase;
  dist.probs = softmax(w_par_ * compound_slot_encoding(w1, w2));
  return dist;
}

PredictionDistribution Model::predict_w1(const std::string& w2,
                                         const ParaphraseTemplate& tmpl) const {
  auto tokens = template_tokens(tmpl, nullptr, &w2);
  PredictionDistribution dist;
  dist.target = PredictionTarget::W1;
  dist.probs = softmax(w_word_ * encode_sequence_at(tokens, tmpl.w1_position()));
  return dist;
}

PredictionDistribution Model::predict_w2(const ParaphraseTemplate& tmpl,
                                         const std::string& w1) const {
  auto tokens = template_tokens(tmpl, &w1, nullptr);
  PredictionDistribution dist;
  dist.target = PredictionTarget::W2;
  dist.probs = softmax(w_word_ * encode_sequence_at(tokens, tmpl.w2_position()));
  return dist;
}

double Model::loss(const TrainingInstance& instance) const {
  const int gold_p = vocab_.template_id(instance.tmpl);
  if (gold_p < 0) {
    throw DataError("template not in paraphrase vocabulary: " +
                    instance.tmpl.render());
  }
  const int gold_w1 = vocab_.word_id(instance.w1);
  const int gold_w2 = vocab_.word_id(instance.w2);

  auto head_ce = [&](const Eigen::MatrixXd& head, const std::vector<Token>& tokens,
                     int pos, int gold) {
    Eigen::VectorXd logits = head * encode_sequence_at(tokens, pos);
    return log_sum_exp(logits) - logits[gold];
  };

  std::vector<Token> seq_p = {Token::word(gold_w2), Token::placeholder(SpecialToken::P),
                              Token::word(gold_w1)};
  double ce = head_ce(w_par_, seq_p, 1, gold_p);
  ce += head_ce(w_word_, template_tokens(instance.tmpl, nullptr, &instance.w2),
                instance.tmpl.w1_position(), gold_w1);
  ce += head_ce(w_word_, template_tokens(instance.tmpl, &instance.w1, nullptr),
                instance.tmpl.w2_position(), gold_w2);
  return instance.score * ce;
}

Gradients Model::zero_gradients() const {
  const int d = config_.dim;
  Gradients g;
  g.unk = Eigen::VectorXd::Zero(d);
  g.specials = Eigen::MatrixXd::Zero(d, kSpecialCount);
  g.fwd.w_in = Eigen::MatrixXd::Zero(4 * d, d);
  g.fwd.w_rec = Eigen::MatrixXd::Zero(4 * d, d);
  g.fwd.bias = Eigen::VectorXd::Zero(4 * d);
  g.bwd = g.fwd;
  g.w_word = Eigen::MatrixXd::Zero(vocab_.word_count(), 2 * d);
  g.w_par = Eigen::MatrixXd::Zero(vocab_.template_count(), 2 * d);
  return g;
}

void Model::backprop_direction(const LstmDirection& params,
                               const DirectionTrace& trace,
                               const std::vector<Eigen::VectorXd>& inputs,
                               bool reverse, int scan_step,
                               Eigen::VectorXd d_hidden, LstmDirection& grads,
                               std::vector<Eigen::VectorXd>& d_inputs) const {
  const int d = config_.dim;
  const int T = static_cast<int>(inputs.size());
  Eigen::VectorXd d_cell = Eigen::VectorXd::Zero(d);
  for (int s = scan_step; s >= 0; --s) {
    const int pos = reverse ? T - 1 - s : s;
    const Eigen::VectorXd& i = trace.gate_i[s];
    const Eigen::VectorXd& f = trace.gate_f[s];
    const Eigen::VectorXd& g = trace.gate_g[s];
    const Eigen::VectorXd& o = trace.gate_o[s];
    const Eigen::VectorXd& tc = trace.tanh_cell[s];
    Eigen::VectorXd c_prev =
        s > 0 ? trace.cell[s - 1] : Eigen::VectorXd::Zero(d);
    Eigen::VectorXd h_prev =
        s > 0 ? trace.hidden[s - 1] : Eigen::VectorXd::Zero(d);

    Eigen::VectorXd d_o = d_hidden.cwiseProduct(tc);
    d_cell += d_hidden.cwiseProduct(o).cwiseProduct(
        (1.0 - tc.array().square()).matrix());
    Eigen::VectorXd d_i = d_cell.cwiseProduct(g);
    Eigen::VectorXd d_g = d_cell.cwiseProduct(i);
    Eigen::VectorXd d_f = d_cell.cwiseProduct(c_prev);

    Eigen::VectorXd d_z(4 * d);
    d_z.segment(0, d) = d_i.cwiseProduct(i).cwiseProduct((1.0 - i.array()).matrix());
    d_z.segment(d, d) = d_f.cwiseProduct(f).cwiseProduct((1.0 - f.array()).matrix());
    d_z.segment(2 * d, d) = d_g.cwiseProduct((1.0 - g.array().square()).matrix());
    d_z.segment(3 * d, d) = d_o.cwiseProduct(o).cwiseProduct((1.0 - o.array()).matrix());

    grads.w_in.noalias() += d_z * inputs[pos].transpose();
    grads.w_rec.noalias() += d_z * h_prev.transpose();
    grads.bias += d_z;
    d_inputs[pos].noalias() += params.w_in.transpose() * d_z;

    d_hidden.noalias() = params.w_rec.transpose() * d_z;
    d_cell = d_cell.cwiseProduct(f);
  }
}

void Model::backprop_sequence(const std::vector<Token>& tokens,
                              const SequenceTrace& trace, int pos,
                              const Eigen::VectorXd& d_output,
                              Gradients& grads) const {
  const int d = config_.dim;
  const int T = static_cast<int>(tokens.size());
  std::vector<Eigen::VectorXd> d_inputs(T, Eigen::VectorXd::Zero(d));
  backprop_direction(fwd_, trace.fwd, trace.inputs, false, pos, d_output.head(d),
                     grads.fwd, d_inputs);
  backprop_direction(bwd_, trace.bwd, trace.inputs, true, T - 1 - pos,
                     d_output.tail(d), grads.bwd, d_inputs);
  for (int t = 0; t < T; ++t) {
    if (tokens[t].special) {
      grads.specials.col(tokens[t].id) += d_inputs[t];
    } else if (tokens[t].id == Vocabulary::kUnkId) {
      grads.unk += d_inputs[t];
    }
    // Fixed pre-trained columns receive no update.
  }
}

double Model::accumulate_gradients(const TrainingInstance& instance,
                                   Gradients& grads) const {
  const int gold_p = vocab_.template_id(instance.tmpl);
  if (gold_p < 0) {
    throw DataError("template not in paraphrase vocabulary: " +
                    instance.tmpl.render());
  }
  const int gold_w1 = vocab_.word_id(instance.w1);
  const int gold_w2 = vocab_.word_id(instance.w2);
  const double s = instance.score;

  auto subtask = [&](const Eigen::MatrixXd& head, Eigen::MatrixXd& head_grad,
                     const std::vector<Token>& tokens, int pos, int gold) {
    SequenceTrace trace = run_encoder(tokens);
    Eigen::VectorXd y = trace_output(trace, pos);
    Eigen::VectorXd logits = head * y;
    double ce = log_sum_exp(logits) - logits[gold];
    Eigen::VectorXd d_logits = s * softmax(logits);
    d_logits[gold] -= s;
    head_grad.noalias() += d_logits * y.transpose();
    Eigen::VectorXd d_y = head.transpose() * d_logits;
    backprop_sequence(tokens, trace, pos, d_y, grads);
    return ce;
  };

  std::vector<Token> seq_p = {Token::word(gold_w2), Token::placeholder(SpecialToken::P),
                              Token::word(gold_w1)};
  double ce = subtask(w_par_, grads.w_par, seq_p, 1, gold_p);
  ce += subtask(w_word_, grads.w_word,
                template_tokens(instance.tmpl, nullptr, &instance.w2),
                instance.tmpl.w1_position(), gold_w1);
  ce += subtask(w_word_, grads.w_word,
                template_tokens(instance.tmpl, &instance.w1, nullptr),
                instance.tmpl.w2_position(), gold_w2);
  return s * ce;
}

std::vector<Model::ParamView> Model::learned_parameters() {
  return {
      {"unk", unk_.data(), unk_.size()},
      {"specials", specials_.data(), specials_.size()},
      {"fwd.w_in", fwd_.w_in.data(), fwd_.w_in.size()},
      {"fwd.w_rec", fwd_.w_rec.data(), fwd_.w_rec.size()},
      {"fwd.bias", fwd_.bias.data(), fwd_.bias.size()},
      {"bwd.w_in", bwd_.w_in.data(), bwd_.w_in.size()},
      {"bwd.w_rec", bwd_.w_rec.data(), bwd_.w_rec.size()},
      {"bwd.bias", bwd_.bias.data(), bwd_.bias.size()},
      {"w_word", w_word_.data(), w_word_.size()},
      {"w_par", w_par_.data(), w_par_.size()},
  };
}

std::vector<Model::ParamView> Model::views_of(Gradients& grads) {
  return {
      {"unk", grads.unk.data(), grads.unk.size()},
      {"specials", grads.specials.data(), grads.specials.size()},
      {"fwd.w_in", grads.fwd.w_in.data(), grads.fwd.w_in.size()},
      {"fwd.w_rec", grads.fwd.w_rec.data(), grads.fwd.w_rec.size()},
      {"fwd.bias", grads.fwd.bias.data(), grads.fwd.bias.size()},
      {"bwd.w_in", grads.bwd.w_in.data(), grads.bwd.w_in.size()},
      {"bwd.w_rec", grads.bwd.w_rec.data(), grads.bwd.w_rec.size()},
      {"bwd.bias", grads.bwd.bias.data(), grads.bwd.bias.size()},
      {"w_word", grads.w_word.data(), grads.w_word.size()},
      {"w_par", grads.w_par.data(), grads.w_par.size()},
  };
}

Model::Snapshot Model::snapshot() const {
  return {unk_, specials_, fwd_, bwd_, w_word_, w_par_};
}

void Model::restore(const Snapshot& snap) {
  unk_ = snap.unk;
  specials_ = snap.specials;
  fwd_ = snap.fwd;
  bwd_ = snap.bwd;
  w_word_ = snap.w_word;
  w_par_ = snap.w_par;
}

TrainReport Model::train(const std::vector<TrainingInstance>& train_set,
                         const std::vector<TrainingInstance>& val_set,
                         std::ostream* log) {
  if (train_set.empty() || val_set.empty()) {
    throw DataError("training and validation sets must be non-empty");
  }

  Rng rng(config_.seed);
  Gradients velocity = zero_gradients();
  auto velocity_views = views_of(velocity);
  auto param_views = learned_parameters();

  EarlyStopper stopper(config_.patience);
  Snapshot best = snapshot();
  TrainReport report;

  std::vector<std::size_t> order(train_set.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  for (int epoch = 1; epoch <= config_.max_epochs; ++epoch) {
    rng.shuffle(order);
    double epoch_loss = 0.0;
    for (std::size_t start = 0; start < order.size();
         start += static_cast<std::size_t>(config_.batch_size)) {
      std::size_t end = std::min(order.size(),
                                 start + static_cast<std::size_t>(config_.batch_size));
      Gradients grads = zero_gradients();
      double batch_loss = 0.0;
      for (std::size_t i = start; i < end; ++i) {
        batch_loss += accumulate_gradients(train_set[order[i]], grads);
      }
      if (!std::isfinite(batch_loss)) {
        throw NumericError("non-finite loss at epoch " + std::to_string(epoch) +
                           ", batch starting at instance " +
                           std::to_string(start) +
                           "; the learning rate is likely too high");
      }
      epoch_loss += batch_loss;

      auto grad_views = views_of(grads);
      for (std::size_t p = 0; p < param_views.size(); ++p) {
        double* v = velocity_views[p].data;
        const double* g = grad_views[p].data;
        double* w = param_views[p].data;
        for (std::ptrdiff_t i = 0; i < param_views[p].size; ++i) {
          v[i] = config_.momentum * v[i] - config_.learning_rate * g[i];
          w[i] += v[i];
        }
      }
    }

    double val_loss = 0.0;
    for (const auto& instance : val_set) val_loss += loss(instance);
    val_loss /= static_cast<double>(val_set.size());

    report.train_losses.push_back(epoch_loss /
                                  static_cast<double>(train_set.size()));
    report.val_losses.push_back(val_loss);
    if (log) {
      (*log) << "epoch " << epoch << " train_loss "
             << report.train_losses.back() << " val_loss " << val_loss << "\n";
    }

    auto decision = stopper.observe(val_loss);
    if (decision.improved) best = snapshot();
    report.stopped_epoch = epoch;
    if (decision.stop) break;
  }

  restore(best);
  report.best_epoch = stopper.best_epoch();
  if (log) {
    (*log) << "kept parameters from epoch " << report.best_epoch << "\n";
  }
  return report;
}

namespace {

void write_bytes(std::ostream& out, const void* data, std::size_t n) {
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
}

void write_u32(std::ostream& out, std::uint32_t v) { write_bytes(out, &v, 4); }
void write_u64(std::ostream& out, std::uint64_t v) { write_bytes(out, &v, 8); }

void write_string(std::ostream& out, const std::string& s) {
  write_u32(out, static_cast<std::uint32_t>(s.size()));
  write_bytes(out, s.data(), s.size());
}

void write_matrix(std::ostream& out, const Eigen::MatrixXd& m) {
  write_u64(out, static_cast<std::uint64_t>(m.rows()));
  write_u64(out, static_cast<std::uint64_t>(m.cols()));
  write_bytes(out, m.data(), sizeof(double) * static_cast<std::size_t>(m.size()));
}

void write_vector(std::ostream& out, const Eigen::VectorXd& v) {
  write_u64(out, static_cast<std::uint64_t>(v.size()));
  write_bytes(out, v.data(), sizeof(double) * static_cast<std::size_t>(v.size()));
}

void read_bytes(std::istream& in, void* data, std::size_t n) {
  in.read(static_cast<char*>(data), static_cast<std::streamsize>(n));
  if (!in) throw DataError("truncated model checkpoint");
}

std::uint32_t read_u32(std::istream& in) {
  std::uint32_t v;
  read_bytes(in, &v, 4);
  return v;
}

std::uint64_t read_u64(std::istream& in) {
  std::uint64_t v;
  read_bytes(in, &v, 8);
  return v;
}

std::string read_string(std::istream& in) {
  std::uint32_t n = read_u32(in);
  std::string s(n, '\0');
  read_bytes(in, s.data(), n);
  return s;
}

Eigen::MatrixXd read_matrix(std::istream& in) {
  std::uint64_t rows = read_u64(in);
  std::uint64_t cols = read_u64(in);
  Eigen::MatrixXd m(rows, cols);
  read_bytes(in, m.data(), sizeof(double) * static_cast<std::size_t>(m.size()));
  return m;
}

Eigen::VectorXd read_vector(std::istream& in) {
  std::uint64_t n = read_u64(in);
  Eigen::VectorXd v(n);
  read_bytes(in, v.data(), sizeof(double) * static_cast<std::size_t>(v.size()));
  return v;
}

constexpr char kMagic[4] = {'N', 'C', 'P', 'M'};
constexpr std::uint32_t kVersion = 1;

}  // namespace

void Model::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write checkpoint: " + path);
  write_bytes(out, kMagic, 4);
  write_u32(out, kVersion);
  write_string(out, config_to_json(config_).dump());

  write_u64(out, static_cast<std::uint64_t>(vocab_.word_count()));
  for (int i = 0; i < vocab_.word_count(); ++i) write_string(out, vocab_.word(i));
  write_u64(out, static_cast<std::uint64_t>(vocab_.template_count()));
  for (int i = 0; i < vocab_.template_count(); ++i) {
    write_string(out, vocab_.template_at(i).render());
  }

  write_matrix(out, fixed_);
  write_vector(out, unk_);
  write_matrix(out, specials_);
  for (const auto* dir : {&fwd_, &bwd_}) {
    write_matrix(out, dir->w_in);
    write_matrix(out, dir->w_rec);
    write_vector(out, dir->bias);
  }
  write_matrix(out, w_word_);
  write_matrix(out, w_par_);
  if (!out) throw DataError("failed writing checkpoint: " + path);
}

Model Model::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open checkpoint: " + path);
  char magic[4];
  read_bytes(in, magic, 4);
  if (std::memcmp(magic, kMagic, 4) != 0) {
    throw DataError("not a model checkpoint: " + path);
  }
  std::uint32_t version = read_u32(in);
  if (version != kVersion) {
    throw DataError("unsupported checkpoint version " + std::to_string(version));
  }

  Model model;
  model.config_ = config_from_json(nlohmann::json::parse(read_string(in)));

  std::uint64_t word_count = read_u64(in);
  for (std::uint64_t i = 0; i < word_count; ++i) {
    std::string word = read_string(in);
    if (i == 0) {
      if (word != kUnkWord) throw DataError("corrupt checkpoint vocabulary");
      continue;
    }
    model.vocab_.add_word(word);
  }
  std::uint64_t template_count = read_u64(in);
  for (std::uint64_t i = 0; i < template_count; ++i) {
    model.vocab_.add_template(ParaphraseTemplate::parse(read_string(in)));
  }

  model.fixed_ = read_matrix(in);
  model.unk_ = read_vector(in);
  model.specials_ = read_matrix(in);
  for (auto* dir : {&model.fwd_, &model.bwd_}) {
    dir->w_in = read_matrix(in);
    dir->w_rec = read_matrix(in);
    dir->bias = read_vector(in);
  }
  model.w_word_ = read_matrix(in);
  model.w_par_ = read_matrix(in);
  return model;
}

}  // namespace ncpara
