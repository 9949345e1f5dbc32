#include "crosslex/embeddings.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace crosslex::embeddings {

namespace {

[[noreturn]] void fail(const std::filesystem::path& path, std::size_t line,
                       const std::string& what) {
  throw std::runtime_error(path.string() + ":" + std::to_string(line) + ": " + what);
}

bool parse_double(const std::string& tok, double& out) {
  try {
    std::size_t used = 0;
    out = std::stod(tok, &used);
    return used == tok.size();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

std::pair<Vocabulary, Matrix> load_embeddings(const std::filesystem::path& path,
                                              std::optional<std::size_t> expect_dim) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open embedding file: " + path.string());

  std::string line;
  if (!std::getline(in, line)) fail(path, 1, "empty file");
  std::istringstream header(line);
  long long count = -1, dim = -1;
  std::string extra;
  if (!(header >> count >> dim) || (header >> extra) || count < 1 || dim < 1)
    fail(path, 1, "malformed header, expected \"<count> <dim>\"");
  if (expect_dim && static_cast<std::size_t>(dim) != *expect_dim)
    fail(path, 1, "dimension " + std::to_string(dim) + " does not match expected " +
                      std::to_string(*expect_dim));

  const auto d = static_cast<std::size_t>(dim);
  std::vector<std::string> words;
  words.reserve(count);
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(count) * d);
  std::unordered_map<std::string, std::size_t> seen;
  std::size_t duplicates = 0;

  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() && in.eof()) break;
    std::istringstream row(line);
    std::string word;
    if (!(row >> word)) fail(path, lineno, "missing word");
    std::vector<double> vec(d);
    std::string tok;
    std::size_t got = 0;
    while (row >> tok) {
      if (got == d) fail(path, lineno, "row has more than " + std::to_string(d) + " values");
      double v;
      if (!parse_double(tok, v)) fail(path, lineno, "cannot parse value \"" + tok + "\"");
      if (!std::isfinite(v)) fail(path, lineno, "non-finite value for word \"" + word + "\"");
      vec[got++] = v;
    }
    if (got != d)
      fail(path, lineno, "row has " + std::to_string(got) + " values, expected " +
                             std::to_string(d));
    if (seen.count(word)) {
      // First occurrence wins; corpora sometimes carry casing artifacts.
      ++duplicates;
      continue;
    }
    seen.emplace(word, words.size());
    words.push_back(word);
    values.insert(values.end(), vec.begin(), vec.end());
  }
  if (static_cast<long long>(words.size() + duplicates) != count)
    fail(path, lineno, "header promised " + std::to_string(count) + " rows, found " +
                           std::to_string(words.size() + duplicates));
  if (duplicates > 0)
    std::cerr << "warning: " << path.string() << ": " << duplicates
              << " duplicate word(s), kept first occurrence\n";
  if (words.empty()) fail(path, lineno, "no embedding rows");

  Matrix emb(words.size(), d);
  std::copy(values.begin(), values.end(), emb.data());
  return {Vocabulary::build(std::move(words)), std::move(emb)};
}

void save_embeddings(const std::filesystem::path& path, const Vocabulary& vocab,
                     const Matrix& emb) {
  if (vocab.size() != emb.rows())
    throw std::invalid_argument("save_embeddings: vocabulary/matrix row mismatch");
  for (const auto& w : vocab.words)
    if (w.find_first_of(" \t\n\r") != std::string::npos)
      throw std::invalid_argument("save_embeddings: word contains whitespace: \"" + w + "\"");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write embedding file: " + path.string());
  out << vocab.size() << ' ' << emb.cols() << '\n';
  char buf[64];
  for (std::size_t i = 0; i < emb.rows(); ++i) {
    out << vocab.words[i];
    const double* r = emb.row(i);
    for (std::size_t j = 0; j < emb.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), " %.9g", r[j]);
      out << buf;
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

FrequencyTable build_frequency_table(const std::vector<std::string>& tokens) {
  FrequencyTable t;
  for (const auto& tok : tokens) {
    if (tok.empty()) throw std::invalid_argument("build_frequency_table: empty token");
    ++t.counts[tok];
    ++t.total_tokens;
  }
  return t;
}

std::size_t load_frequency_sidecar(const std::filesystem::path& path, Vocabulary& vocab) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open frequency file: " + path.string());
  std::unordered_map<std::string, std::int64_t> counts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) fail(path, lineno, "expected \"<word>\\t<count>\"");
    const std::string word = line.substr(0, tab);
    std::int64_t c = 0;
    try {
      c = std::stoll(line.substr(tab + 1));
    } catch (const std::exception&) {
      fail(path, lineno, "cannot parse count");
    }
    if (c < 0) fail(path, lineno, "negative count");
    counts[word] = c;
  }
  vocab.freq.assign(vocab.size(), 0);
  std::size_t missing = 0;
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    auto it = counts.find(vocab.words[i]);
    if (it == counts.end())
      ++missing;
    else
      vocab.freq[i] = it->second;
  }
  if (missing > 0)
    std::cerr << "warning: " << path.string() << ": " << missing
              << " vocabulary word(s) missing from frequency file (count 0)\n";
  return missing;
}

void save_frequency_sidecar(const std::filesystem::path& path, const Vocabulary& vocab) {
  if (!vocab.has_freq())
    throw std::invalid_argument("save_frequency_sidecar: vocabulary has no frequency data");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write frequency file: " + path.string());
  for (std::size_t i = 0; i < vocab.size(); ++i)
    out << vocab.words[i] << '\t' << vocab.freq[i] << '\n';
}

std::pair<Vocabulary, Matrix> filter_by_frequency(const Vocabulary& vocab, const Matrix& emb,
                                                  std::int64_t min_freq) {
  if (min_freq < 1) throw std::invalid_argument("filter_by_frequency: min_freq must be >= 1");
  if (!vocab.has_freq())
    throw std::invalid_argument("filter_by_frequency: vocabulary has no frequency data");
  if (vocab.size() != emb.rows())
    throw std::invalid_argument("filter_by_frequency: vocabulary/matrix row mismatch");

  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < vocab.size(); ++i)
    if (vocab.freq[i] >= min_freq) keep.push_back(i);
  if (keep.empty())
    throw std::runtime_error("filter_by_frequency: no word reaches min_freq " +
                             std::to_string(min_freq));

  std::vector<std::string> words;
  std::vector<std::int64_t> freq;
  words.reserve(keep.size());
  freq.reserve(keep.size());
  for (std::size_t i : keep) {
    words.push_back(vocab.words[i]);
    freq.push_back(vocab.freq[i]);
  }
  return {Vocabulary::build(std::move(words), std::move(freq)), emb.take_rows(keep)};
}

std::vector<std::string> tokenize_whitespace(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace crosslex::embeddings
