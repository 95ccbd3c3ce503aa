#ifndef NCPARA_TYPES_HPP
#define NCPARA_TYPES_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ncpara {

inline constexpr const char* kW1Placeholder = "[w1]";
inline constexpr const char* kW2Placeholder = "[w2]";
inline constexpr const char* kUnkWord = "<unk>";

// A two-word noun-compound (w1 w2), both constituents lowercase lemmas.
struct NounCompound {
  std::string w1;
  std::string w2;

  auto operator<=>(const NounCompound&) const = default;
};

// One corpus n-gram with its occurrence count, n in [3, 5].
struct NGramRecord {
  std::vector<std::string> tokens;
  std::uint64_t frequency = 0;
};

// A token sequence with exactly one [w1] and one [w2] slot, [w2] first,
// 3..5 tokens total. Rendered with the literal placeholder strings.
class ParaphraseTemplate {
 public:
  ParaphraseTemplate() = default;
  // Throws DataError if the token sequence violates the template invariants.
  explicit ParaphraseTemplate(std::vector<std::string> tokens);

  static std::optional<ParaphraseTemplate> try_parse(const std::string& text);
  static ParaphraseTemplate parse(const std::string& text);  // throws DataError

  const std::vector<std::string>& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  int w1_position() const { return w1_pos_; }
  int w2_position() const { return w2_pos_; }
  bool ends_with_w1() const {
    return w1_pos_ == static_cast<int>(tokens_.size()) - 1;
  }
  std::string render() const;

  bool operator==(const ParaphraseTemplate& other) const {
    return tokens_ == other.tokens_;
  }
  bool operator<(const ParaphraseTemplate& other) const {
    return tokens_ < other.tokens_;
  }

 private:
  std::vector<std::string> tokens_;
  int w1_pos_ = -1;
  int w2_pos_ = -1;
};

// The atom of supervision: one weighted (w2, template, w1, score) example.
struct TrainingInstance {
  std::string w2;
  ParaphraseTemplate tmpl;
  std::string w1;
  double score = 0.0;
};

// A relation-labeled compound for the classification task.
struct LabeledCompound {
  std::string w1;
  std::string w2;
  std::string label;
};

std::vector<std::string> split_whitespace(const std::string& line);
std::vector<std::string> split_tab(const std::string& line);

// Shortest round-trip decimal rendering; used everywhere a float is written to
// an output file so that reruns are byte-identical.
std::string format_double(double value);

}  // namespace ncpara

#endif
