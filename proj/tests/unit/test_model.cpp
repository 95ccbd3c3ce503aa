#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>

#include "ncpara/errors.hpp"
#include "ncpara/model.hpp"
#include "../support.hpp"

using namespace ncpara;
using ncpara::testing::tmpl;

namespace {

std::vector<std::string> small_words() {
  return {"cake", "apple", "oil", "olive", "wall", "stone", "meeting",
          "morning", "system"};
}

std::vector<TrainingInstance> small_instances() {
  return {
      {"cake", tmpl("[w2] made of [w1]"), "apple", 0.6},
      {"oil", tmpl("[w2] of [w1]"), "olive", 0.3},
      {"wall", tmpl("[w2] made of [w1]"), "stone", 0.1},
      {"meeting", tmpl("[w2] held in [w1]"), "morning", 0.5},
  };
}

Model small_model(std::uint64_t seed = 17, int dim = 6) {
  return testing::make_model(small_words(), small_instances(), dim, seed);
}

}  // namespace

TEST_CASE("encoder output has dimension 2d and is finite") {
  auto model = small_model();
  auto y = model.encode_with_placeholder(
      {Token::word(model.vocab().word_id("cake"))}, SpecialToken::P,
      {Token::word(model.vocab().word_id("apple"))});
  CHECK(y.size() == 12);
  CHECK(y.allFinite());

  // Minimal sequence: a lone placeholder still encodes.
  auto solo = model.encode_with_placeholder({}, SpecialToken::W1, {});
  CHECK(solo.size() == 12);
  CHECK(solo.allFinite());

  CHECK_THROWS_AS(model.encode_sequence_at({}, 0), DataError);
}

TEST_CASE("prediction heads emit valid distributions") {
  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    auto model = small_model(seed);
    auto p = model.predict_paraphrase("apple", "cake");
    auto w1 = model.predict_w1("cake", tmpl("[w2] made of [w1]"));
    auto w2 = model.predict_w2(tmpl("[w2] made of [w1]"), "apple");
    for (const auto* dist : {&p, &w1, &w2}) {
      CHECK(dist->probs.minCoeff() >= 0.0);
      CHECK(dist->probs.sum() == doctest::Approx(1.0).epsilon(1e-6));
    }
    CHECK(p.probs.size() == model.vocab().template_count());
    CHECK(w1.probs.size() == model.vocab().word_count());
  }
}

TEST_CASE("zeroed paraphrase head yields the uniform distribution") {
  auto model = small_model();
  for (auto& view : model.learned_parameters()) {
    if (view.name == "w_par") {
      std::fill(view.data, view.data + view.size, 0.0);
    }
  }
  auto dist = model.predict_paraphrase("apple", "cake");
  const double uniform = 1.0 / model.vocab().template_count();
  for (Eigen::Index i = 0; i < dist.probs.size(); ++i) {
    CHECK(dist.probs[i] == doctest::Approx(uniform).epsilon(1e-12));
  }
}

TEST_CASE("cross entropy of a one-hot distribution is exactly zero") {
  Eigen::VectorXd probs = Eigen::VectorXd::Zero(4);
  probs[2] = 1.0;
  CHECK(cross_entropy(probs, 2) == 0.0);
}

TEST_CASE("loss is linear in the instance score") {
  auto model = small_model();
  TrainingInstance instance{"cake", tmpl("[w2] made of [w1]"), "apple", 0.4};
  double base = model.loss(instance);
  instance.score = 0.8;
  CHECK(model.loss(instance) == doctest::Approx(2.0 * base).epsilon(1e-12));
  CHECK(base > 0.0);
  CHECK(std::isfinite(base));
}

TEST_CASE("uniform heads give loss 3 ln|V| for |V_w| = |V_p| = 10") {
  // Nine words plus <unk> and ten templates.
  std::vector<std::string> words = small_words();
  std::vector<TrainingInstance> instances;
  std::vector<std::string> preps = {"of",  "in",   "on",   "at", "by",
                                    "for", "with", "from", "to", "near"};
  for (const auto& prep : preps) {
    instances.push_back({"cake", tmpl("[w2] " + prep + " [w1]"), "apple", 1.0});
  }
  auto model = testing::make_model(words, instances, 5, 23);
  REQUIRE(model.vocab().word_count() == 10);
  REQUIRE(model.vocab().template_count() == 10);
  for (auto& view : model.learned_parameters()) {
    if (view.name == "w_par" || view.name == "w_word") {
      std::fill(view.data, view.data + view.size, 0.0);
    }
  }
  double loss = model.loss(instances.front());
  CHECK(loss == doctest::Approx(3.0 * std::log(10.0)).epsilon(1e-9));
}

TEST_CASE("argmax_k ordering, clamps and ties") {
  Eigen::VectorXd probs(3);
  probs << 0.1, 0.7, 0.2;
  auto top1 = argmax_k(probs, 1);
  REQUIRE(top1.size() == 1);
  CHECK(top1[0].first == 1);
  CHECK(top1[0].second == doctest::Approx(0.7));

  auto full = argmax_k(probs, 3);
  CHECK(full[0].first == 1);
  CHECK(full[1].first == 2);
  CHECK(full[2].first == 0);

  Eigen::VectorXd tie(2);
  tie << 0.5, 0.5;
  CHECK(argmax_k(tie, 1)[0].first == 0);

  CHECK_THROWS_AS(argmax_k(probs, 0), UsageError);
  CHECK_THROWS_AS(argmax_k(probs, 4), UsageError);
}

TEST_CASE("early stopping traces the patience rule") {
  EarlyStopper stopper(3);
  std::vector<double> losses = {5.0, 4.0, 4.1, 4.2, 4.3};
  std::vector<bool> stops;
  for (double loss : losses) stops.push_back(stopper.observe(loss).stop);
  CHECK(stops == std::vector<bool>{false, false, false, false, true});
  CHECK(stopper.best_epoch() == 2);
}

TEST_CASE("analytic gradients match central finite differences") {
  auto model = small_model(31, 4);
  std::vector<TrainingInstance> batch = {
      {"cake", tmpl("[w2] made of [w1]"), "apple", 0.7},
      {"meeting", tmpl("[w2] held in [w1]"), "morning", 0.4},
      {"oil", tmpl("[w2] of [w1]"), "quince", 0.9},  // OOV exercises <unk>
  };

  Gradients grads = model.zero_gradients();
  for (const auto& instance : batch) model.accumulate_gradients(instance, grads);
  auto grad_views = Model::views_of(grads);
  auto param_views = model.learned_parameters();

  auto total_loss = [&]() {
    double sum = 0.0;
    for (const auto& instance : batch) sum += model.loss(instance);
    return sum;
  };

  const double h = 1e-5;
  for (std::size_t p = 0; p < param_views.size(); ++p) {
    for (std::ptrdiff_t i = 0; i < param_views[p].size; ++i) {
      double saved = param_views[p].data[i];
      param_views[p].data[i] = saved + h;
      double plus = total_loss();
      param_views[p].data[i] = saved - h;
      double minus = total_loss();
      param_views[p].data[i] = saved;
      double numeric = (plus - minus) / (2.0 * h);
      double analytic = grad_views[p].data[i];
      double scale = std::max({std::abs(numeric), std::abs(analytic), 1e-4});
      CHECK(std::abs(numeric - analytic) / scale < 1e-4);
    }
  }
}

TEST_CASE("one epoch on a single instance strictly decreases its loss") {
  std::vector<TrainingInstance> data = {
      {"cake", tmpl("[w2] made of [w1]"), "apple", 1.0}};
  ModelConfig config;
  config.dim = 6;
  config.seed = 41;
  config.max_epochs = 1;
  auto table = testing::random_table(small_words(), 6, 17);
  auto vocab = Vocabulary::build(table, small_instances());
  Model model(vocab, table, config);
  double initial = model.loss(data[0]);
  model.train(data, data);
  CHECK(model.loss(data[0]) < initial);
}

TEST_CASE("training twice from one seed gives identical parameters") {
  auto data = small_instances();
  auto run = [&]() {
    auto model = small_model(53);
    model.train(data, data);
    return model.predict_paraphrase("apple", "cake").probs;
  };
  Eigen::VectorXd a = run();
  Eigen::VectorXd b = run();
  REQUIRE(a.size() == b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("pre-trained embedding columns are bit-identical after training") {
  auto model = small_model(59);
  Eigen::MatrixXd before = model.fixed_embeddings();
  auto data = small_instances();
  model.train(data, data);
  const Eigen::MatrixXd& after = model.fixed_embeddings();
  REQUIRE(before.size() == after.size());
  CHECK(std::memcmp(before.data(), after.data(),
                    sizeof(double) * before.size()) == 0);
}

TEST_CASE("the word head is one shared buffer for both subtasks") {
  auto model = small_model(61);
  int w_word_views = 0;
  auto before_w1 = model.predict_w1("cake", tmpl("[w2] made of [w1]")).probs;
  auto before_w2 = model.predict_w2(tmpl("[w2] made of [w1]"), "apple").probs;
  for (auto& view : model.learned_parameters()) {
    if (view.name == "w_word") {
      ++w_word_views;
      view.data[3] += 0.5;  // mutate through the shared storage
    }
  }
  CHECK(w_word_views == 1);
  auto after_w1 = model.predict_w1("cake", tmpl("[w2] made of [w1]")).probs;
  auto after_w2 = model.predict_w2(tmpl("[w2] made of [w1]"), "apple").probs;
  CHECK((before_w1 - after_w1).norm() > 0.0);
  CHECK((before_w2 - after_w2).norm() > 0.0);
}

TEST_CASE("encode_template is deterministic with 2d output") {
  auto model = small_model(67);
  auto a = model.encode_template(tmpl("[w2] made of [w1]"));
  auto b = model.encode_template(tmpl("[w2] made of [w1]"));
  CHECK(a.size() == model.output_dim());
  CHECK((a - b).norm() == 0.0);
  double cos = a.dot(a) / (a.norm() * a.norm());
  CHECK(cos == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("checkpoint round trip preserves predictions bit for bit") {
  auto model = small_model(71);
  auto path = std::filesystem::temp_directory_path() / "ncpara_test_model.bin";
  model.save(path.string());
  auto loaded = Model::load(path.string());
  std::filesystem::remove(path);

  auto a = model.predict_paraphrase("apple", "cake").probs;
  auto b = loaded.predict_paraphrase("apple", "cake").probs;
  REQUIRE(a.size() == b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  CHECK(loaded.config().dim == model.config().dim);
  CHECK(loaded.vocab().word_count() == model.vocab().word_count());
}

TEST_CASE("a few epochs memorize a tiny fixture") {
  std::vector<std::string> words = small_words();
  std::vector<TrainingInstance> data = {
      {"cake", tmpl("[w2] made of [w1]"), "apple", 1.0},
      {"oil", tmpl("[w2] of [w1]"), "olive", 1.0},
      {"meeting", tmpl("[w2] held in [w1]"), "morning", 1.0},
  };
  auto table = testing::random_table(words, 8, 5);
  auto vocab = Vocabulary::build(table, data);
  ModelConfig config;
  config.dim = 8;
  config.seed = 5;
  config.learning_rate = 0.5;
  Model model(vocab, table, config);
  model.train(data, data);
  for (const auto& instance : data) {
    auto dist = model.predict_paraphrase(instance.w1, instance.w2);
    int best = argmax_k(dist.probs, 1)[0].first;
    CHECK(model.vocab().template_at(best) == instance.tmpl);
  }
  // The constituent heads rank the gold words above unrelated ones.
  auto w1_dist = model.predict_w1("cake", tmpl("[w2] made of [w1]"));
  auto w2_dist = model.predict_w2(tmpl("[w2] made of [w1]"), "apple");
  for (const auto* unrelated : {"wall", "stone", "system"}) {
    int id = model.vocab().word_id(unrelated);
    CHECK(w1_dist.probs[model.vocab().word_id("apple")] > w1_dist.probs[id]);
    CHECK(w2_dist.probs[model.vocab().word_id("cake")] > w2_dist.probs[id]);
  }
}

TEST_CASE("non-finite loss aborts with a numeric error") {
  auto model = small_model(73);
  // A blown-up parameter (the learning-rate overflow signature) must stop
  // training with a diagnostic rather than propagate NaNs.
  for (auto& view : model.learned_parameters()) {
    if (view.name == "w_par") view.data[0] = std::nan("");
  }
  auto data = small_instances();
  CHECK_THROWS_AS(model.train(data, data), NumericError);
}
