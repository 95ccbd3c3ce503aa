#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncpara/commands.hpp"
#include "ncpara/errors.hpp"

namespace {

ncpara::RunConfig resolve_config(const std::string& config_path,
                                 const std::vector<std::string>& overrides,
                                 const std::string& seed_override,
                                 const std::string& output_override) {
  ncpara::RunConfig config;
  if (!config_path.empty()) config = ncpara::RunConfig::load(config_path);
  for (const auto& assignment : overrides) config.apply_override(assignment);
  if (!seed_override.empty()) config.apply_override("seed=" + seed_override);
  if (!output_override.empty()) {
    config.apply_override("paths.output=" + output_override);
  }
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noun-compound paraphrasing toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name

  std::string config_path;
  std::vector<std::string> overrides;
  std::string seed_override;
  std::string output_override;
  app.add_option("--config", config_path, "JSON run configuration")
      ->configurable(false);
  app.add_option("--set", overrides,
                 "override a config value, e.g. --set model.dim=50");
  app.add_option("--seed", seed_override, "override the run seed");
  app.add_option("--out", output_override, "override paths.output");

  auto* build_data = app.add_subcommand(
      "build-data", "mine the weighted training set from n-gram shards");
  auto* train = app.add_subcommand("train", "train the multi-task model");

  auto* predict = app.add_subcommand(
      "predict", "predict the missing element of (w1, template, w2)");
  ncpara::PredictQuery query;
  predict->add_option("--w1", query.w1, "first constituent");
  predict->add_option("--w2", query.w2, "second constituent (the head)");
  predict->add_option("--template", query.template_,
                      "paraphrase template, e.g. \"[w2] made of [w1]\"");
  predict->add_option("-k,--top-k", query.k, "number of predictions to print");

  auto* rerank = app.add_subcommand(
      "rerank", "retrieve, re-rank and prune paraphrases for a compound list");
  auto* score =
      app.add_subcommand("score", "score predictions against a gold file");
  auto* classify =
      app.add_subcommand("classify", "relation classification experiment");
  auto* export_encodings = app.add_subcommand(
      "export-encodings", "dump template encodings as TSV");

  CLI11_PARSE(app, argc, argv);

  try {
    auto config =
        resolve_config(config_path, overrides, seed_override, output_override);
    if (build_data->parsed()) {
      ncpara::run_build_data(config, std::cout, std::cerr);
    } else if (train->parsed()) {
      ncpara::run_train(config, std::cerr);
    } else if (predict->parsed()) {
      ncpara::run_predict(config, query, std::cout);
    } else if (rerank->parsed()) {
      ncpara::run_rerank(config, std::cerr);
    } else if (score->parsed()) {
      ncpara::run_score(config, std::cout, std::cerr);
    } else if (classify->parsed()) {
      ncpara::run_classify(config, std::cout, std::cerr);
    } else if (export_encodings->parsed()) {
      ncpara::run_export_encodings(config, std::cerr);
    }
  } catch (const ncpara::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const ncpara::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const ncpara::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
