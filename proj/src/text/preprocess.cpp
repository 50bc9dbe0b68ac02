#include <cctype>

#include "lfm/core/error.hpp"
#include "lfm/text/porter_stemmer.hpp"
#include "lfm/text/text_kit.hpp"

namespace lfm::text {
namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string lowercase(std::string s) {
  for (char& c : s) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return s;
}

std::string strip_punctuation(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (!std::ispunct(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

std::string collapse_whitespace(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (is_space(c)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.push_back(c);
    }
  }
  return out;
}

// Stems each maximal non-space run; whitespace is kept verbatim.
std::string stem_words(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (is_space(s[i])) {
      out.push_back(s[i++]);
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    out += porter_stem(std::string_view(s).substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

std::string preprocess(std::string_view input, const std::vector<PreprocessStep>& steps) {
  std::string s(input);
  for (auto step : steps) {
    switch (step) {
      case PreprocessStep::lowercase: s = lowercase(std::move(s)); break;
      case PreprocessStep::strip_punctuation: s = strip_punctuation(s); break;
      case PreprocessStep::collapse_whitespace: s = collapse_whitespace(s); break;
      case PreprocessStep::stem: s = stem_words(s); break;
    }
  }
  return s;
}

std::vector<std::string> tokenize(std::string_view input, const Tokenizer& tokenizer) {
  if (tokenizer.kind != TokenizerKind::whitespace && tokenizer.q < 2) {
    throw Error(Errc::invalid_argument, "q-gram tokenizer needs q >= 2");
  }
  std::vector<std::string> words;
  {
    std::size_t i = 0;
    while (i < input.size()) {
      while (i < input.size() && is_space(input[i])) ++i;
      std::size_t j = i;
      while (j < input.size() && !is_space(input[j])) ++j;
      if (j > i) words.emplace_back(input.substr(i, j - i));
      i = j;
    }
  }
  auto qgrams = [&](std::string_view text, std::vector<std::string>& out) {
    if (text.empty()) return;
    const auto q = static_cast<std::size_t>(tokenizer.q);
    std::string padded(q - 1, kQgramPad);
    padded += text;
    padded.append(q - 1, kQgramPad);
    for (std::size_t i = 0; i + q <= padded.size(); ++i) out.push_back(padded.substr(i, q));
  };
  switch (tokenizer.kind) {
    case TokenizerKind::whitespace:
      return words;
    case TokenizerKind::qgram: {
      std::vector<std::string> out;
      qgrams(input, out);
      return out;
    }
    case TokenizerKind::word_qgram: {
      std::vector<std::string> out;
      for (const auto& w : words) qgrams(w, out);
      return out;
    }
  }
  return {};
}

}  // namespace lfm::text
