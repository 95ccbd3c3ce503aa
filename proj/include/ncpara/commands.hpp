#ifndef NCPARA_COMMANDS_HPP
#define NCPARA_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ncpara/classifier.hpp"
#include "ncpara/config.hpp"
#include "ncpara/miner.hpp"
#include "ncpara/model.hpp"
#include "ncpara/scorer.hpp"

namespace ncpara {

// The subcommand bodies, shared by the CLI binary, the python module and the
// test suites. Logs go to `err`; machine-readable results go to files or to
// `out`.

MiningStats run_build_data(const RunConfig& config, std::ostream& out,
                           std::ostream& err);

TrainReport run_train(const RunConfig& config, std::ostream& err);

struct PredictQuery {
  std::string w1;        // empty when this is the predicted slot
  std::string w2;
  std::string template_; // rendered template, empty when predicted
  int k = 10;
};

void run_predict(const RunConfig& config, const PredictQuery& query,
                 std::ostream& out);

void run_rerank(const RunConfig& config, std::ostream& err);

ScoreReport run_score(const RunConfig& config, std::ostream& out,
                      std::ostream& err);

EvalReport run_classify(const RunConfig& config, std::ostream& out,
                        std::ostream& err);

void run_export_encodings(const RunConfig& config, std::ostream& err);

// Splits a training set into train/validation by holding out whole compounds.
std::pair<std::vector<TrainingInstance>, std::vector<TrainingInstance>>
split_by_compound(const std::vector<TrainingInstance>& instances,
                  double val_fraction, std::uint64_t seed);

std::string score_report_json(const ScoreReport& report);
std::string eval_report_json(const EvalReport& report);

}  // namespace ncpara

#endif
