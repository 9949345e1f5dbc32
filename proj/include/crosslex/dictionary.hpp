#pragma once

#include <cstddef>
#include <filesystem>
#include <utility>
#include <vector>

#include "crosslex/matrix.hpp"

namespace crosslex {

// Word-translation pairs as (source row, target row) indices.
// Equivalently the sparse 0/1 matrix D in the Procrustes objective.
struct Dictionary {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  bool empty() const { return pairs.empty(); }
  std::size_t size() const { return pairs.size(); }
  bool operator==(const Dictionary& other) const = default;

  // Removes exact duplicates, keeping first occurrences in order.
  void dedup();
  // Throws std::out_of_range if any index exceeds the given sizes.
  void check_bounds(std::size_t src_size, std::size_t trg_size) const;
};

// TSV serialization: "<src_word>\t<trg_word>" per line.
void save_dictionary_tsv(const std::filesystem::path& path, const Dictionary& d,
                         const Vocabulary& src_vocab, const Vocabulary& trg_vocab);
Dictionary load_dictionary_tsv(const std::filesystem::path& path, const Vocabulary& src_vocab,
                               const Vocabulary& trg_vocab);

}  // namespace crosslex
