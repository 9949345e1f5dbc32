#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crosslex/matrix.hpp"

// Loading, saving and frequency-filtering of monolingual embeddings.
//
// Embedding file format: UTF-8 text, first line "<count> <dim>", then
// one "<word> <f1> ... <fdim>" line per word, single-space separated,
// "\n" line endings. Optional frequency sidecar: "<word>\t<count>" per
// line.

namespace crosslex::embeddings {

struct FrequencyTable {
  std::map<std::string, std::int64_t> counts;
  std::int64_t total_tokens = 0;
};

std::pair<Vocabulary, Matrix> load_embeddings(const std::filesystem::path& path,
                                              std::optional<std::size_t> expect_dim = {});

// Writes in the exact format load_embeddings reads, floats printed with
// 9 significant digits so save/load round-trips to identical text.
void save_embeddings(const std::filesystem::path& path, const Vocabulary& vocab,
                     const Matrix& emb);

FrequencyTable build_frequency_table(const std::vector<std::string>& tokens);

// Attaches sidecar counts to a vocabulary; words absent from the
// sidecar get count 0 (reported via the returned missing-word count).
std::size_t load_frequency_sidecar(const std::filesystem::path& path, Vocabulary& vocab);

void save_frequency_sidecar(const std::filesystem::path& path, const Vocabulary& vocab);

// Keeps exactly the words with freq >= min_freq, preserving order, and
// slices the matrix rows consistently. Throws if the result is empty.
std::pair<Vocabulary, Matrix> filter_by_frequency(const Vocabulary& vocab, const Matrix& emb,
                                                  std::int64_t min_freq);

// Whitespace tokenizer for building frequency tables from raw text.
std::vector<std::string> tokenize_whitespace(const std::string& text);

}  // namespace crosslex::embeddings
