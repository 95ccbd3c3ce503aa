#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ncpara/commands.hpp"
#include "ncpara/errors.hpp"
#include "ncpara/io.hpp"
#include "ncpara/miner.hpp"
#include "ncpara/ranking.hpp"
#include "ncpara/scorer.hpp"

namespace py = pybind11;
using ncpara::RunConfig;

namespace {

RunConfig config_from_json_text(const std::string& text) {
  return RunConfig::from_json(nlohmann::json::parse(text));
}

std::vector<double> to_std(const Eigen::VectorXd& v) {
  return {v.data(), v.data() + v.size()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Noun-compound paraphrasing toolkit (C++ core)";

  py::register_exception<ncpara::UsageError>(m, "UsageError");
  py::register_exception<ncpara::DataError>(m, "DataError");
  py::register_exception<ncpara::NumericError>(m, "NumericError");

  m.def("default_config_json",
        []() { return RunConfig{}.to_json().dump(); },
        "The resolved default configuration as a JSON string");

  m.def(
      "build_data_json",
      [](const std::string& config_json) {
        auto config = config_from_json_text(config_json);
        std::ostringstream stats;
        ncpara::run_build_data(config, stats, std::cerr);
        return stats.str();
      },
      py::arg("config_json"),
      "Mine the weighted training set; returns the stats lines");

  m.def(
      "train_json",
      [](const std::string& config_json) {
        auto config = config_from_json_text(config_json);
        auto report = ncpara::run_train(config, std::cerr);
        return nlohmann::json{{"best_epoch", report.best_epoch},
                              {"stopped_epoch", report.stopped_epoch},
                              {"train_losses", report.train_losses},
                              {"val_losses", report.val_losses}}
            .dump();
      },
      py::arg("config_json"));

  m.def(
      "rerank",
      [](const std::string& config_json) {
        ncpara::run_rerank(config_from_json_text(config_json), std::cerr);
      },
      py::arg("config_json"));

  m.def(
      "score_json",
      [](const std::string& config_json) {
        auto config = config_from_json_text(config_json);
        std::ostringstream sink;
        auto report = ncpara::run_score(config, sink, std::cerr);
        return ncpara::score_report_json(report);
      },
      py::arg("config_json"));

  m.def(
      "classify_json",
      [](const std::string& config_json) {
        auto config = config_from_json_text(config_json);
        std::ostringstream sink;
        auto report = ncpara::run_classify(config, sink, std::cerr);
        return ncpara::eval_report_json(report);
      },
      py::arg("config_json"));

  m.def(
      "export_encodings",
      [](const std::string& config_json) {
        ncpara::run_export_encodings(config_from_json_text(config_json),
                                     std::cerr);
      },
      py::arg("config_json"));

  m.def("word_match", &ncpara::word_match, py::arg("pred_word"),
        py::arg("gold_word"));

  m.def(
      "baseline_retrieve",
      [](const std::string& training_set_path, const std::string& w1,
         const std::string& w2) {
        auto instances = ncpara::read_training_set(training_set_path);
        std::vector<std::pair<std::string, double>> out;
        for (const auto& item : ncpara::baseline_retrieve({w1, w2}, instances)) {
          out.emplace_back(item.tmpl.render(), item.final_score);
        }
        return out;
      },
      py::arg("training_set_path"), py::arg("w1"), py::arg("w2"),
      "Templates observed with exactly this compound in the mined training "
      "set, best first; empty when unseen");

  m.def(
      "extract_pos_patterns",
      [](const std::vector<std::string>& tagged_lines) {
        auto extraction = ncpara::extract_pos_patterns(tagged_lines);
        std::vector<std::string> rendered;
        for (const auto& pattern : extraction.patterns) {
          rendered.push_back(pattern.render());
        }
        return py::make_tuple(rendered, extraction.skipped);
      },
      py::arg("tagged_lines"),
      "Returns (patterns, skipped_count) from word/POS tagged gold lines");

  py::class_<ncpara::Model>(m, "Model")
      .def_static("load", &ncpara::Model::load, py::arg("path"))
      .def("save", &ncpara::Model::save, py::arg("path"))
      .def_property_readonly("dim", &ncpara::Model::dim)
      .def_property_readonly("word_count",
                             [](const ncpara::Model& model) {
                               return model.vocab().word_count();
                             })
      .def_property_readonly("template_count",
                             [](const ncpara::Model& model) {
                               return model.vocab().template_count();
                             })
      .def(
          "predict_paraphrase",
          [](const ncpara::Model& model, const std::string& w1,
             const std::string& w2, int k) {
            auto dist = model.predict_paraphrase(w1, w2);
            k = std::min<int>(k, dist.probs.size());
            std::vector<std::pair<std::string, double>> out;
            for (const auto& [index, score] : ncpara::argmax_k(dist.probs, k)) {
              out.emplace_back(model.vocab().template_at(index).render(), score);
            }
            return out;
          },
          py::arg("w1"), py::arg("w2"), py::arg("k") = 10)
      .def(
          "predict_w1",
          [](const ncpara::Model& model, const std::string& w2,
             const std::string& tmpl, int k) {
            auto dist = model.predict_w1(w2, ncpara::ParaphraseTemplate::parse(tmpl));
            k = std::min<int>(k, dist.probs.size());
            std::vector<std::pair<std::string, double>> out;
            for (const auto& [index, score] : ncpara::argmax_k(dist.probs, k)) {
              out.emplace_back(model.vocab().word(index), score);
            }
            return out;
          },
          py::arg("w2"), py::arg("template"), py::arg("k") = 10)
      .def(
          "predict_w2",
          [](const ncpara::Model& model, const std::string& tmpl,
             const std::string& w1, int k) {
            auto dist = model.predict_w2(ncpara::ParaphraseTemplate::parse(tmpl), w1);
            k = std::min<int>(k, dist.probs.size());
            std::vector<std::pair<std::string, double>> out;
            for (const auto& [index, score] : ncpara::argmax_k(dist.probs, k)) {
              out.emplace_back(model.vocab().word(index), score);
            }
            return out;
          },
          py::arg("template"), py::arg("w1"), py::arg("k") = 10)
      .def(
          "encode_template",
          [](const ncpara::Model& model, const std::string& tmpl) {
            return to_std(
                model.encode_template(ncpara::ParaphraseTemplate::parse(tmpl)));
          },
          py::arg("template"))
      .def(
          "paraphrase_vector",
          [](const ncpara::Model& model, const std::string& w1,
             const std::string& w2, int k) {
            return to_std(ncpara::paraphrase_vector({w1, w2}, model, k));
          },
          py::arg("w1"), py::arg("w2"), py::arg("k") = 15);
}
