#include "ncpara/types.hpp"

#include <charconv>
#include <sstream>

#include "ncpara/errors.hpp"

namespace ncpara {

ParaphraseTemplate::ParaphraseTemplate(std::vector<std::string> tokens)
    : tokens_(std::move(tokens)) {
  for (int i = 0; i < static_cast<int>(tokens_.size()); ++i) {
    if (tokens_[i] == kW1Placeholder) {
      if (w1_pos_ >= 0) throw DataError("template has more than one [w1]");
      w1_pos_ = i;
    } else if (tokens_[i] == kW2Placeholder) {
      if (w2_pos_ >= 0) throw DataError("template has more than one [w2]");
      w2_pos_ = i;
    }
  }
  if (w1_pos_ < 0 || w2_pos_ < 0) {
    throw DataError("template must contain both [w1] and [w2]: " + render());
  }
  if (w2_pos_ > w1_pos_) {
    throw DataError("[w2] must precede [w1] in a template: " + render());
  }
  if (tokens_.size() < 3 || tokens_.size() > 5) {
    throw DataError("template length must be 3..5 tokens: " + render());
  }
}

std::optional<ParaphraseTemplate> ParaphraseTemplate::try_parse(
    const std::string& text) {
  try {
    return ParaphraseTemplate(split_whitespace(text));
  } catch (const DataError&) {
    return std::nullopt;
  }
}

ParaphraseTemplate ParaphraseTemplate::parse(const std::string& text) {
  return ParaphraseTemplate(split_whitespace(text));
}

std::string ParaphraseTemplate::render() const {
  std::string out;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (i) out += ' ';
    out += tokens_[i];
  }
  return out;
}

std::vector<std::string> split_whitespace(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

std::vector<std::string> split_tab(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find('\t', start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

std::string format_double(double value) {
  char buffer[64];
  auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

}  // namespace ncpara
