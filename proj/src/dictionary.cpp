#include "crosslex/dictionary.hpp"

#include <fstream>
#include <stdexcept>
#include <unordered_set>

namespace crosslex {

namespace {
struct PairHash {
  std::size_t operator()(const std::pair<std::size_t, std::size_t>& p) const {
    return p.first * 0x9e3779b97f4a7c15ULL + p.second;
  }
};
}  // namespace

void Dictionary::dedup() {
  std::unordered_set<std::pair<std::size_t, std::size_t>, PairHash> seen;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs)
    if (seen.insert(p).second) out.push_back(p);
  pairs = std::move(out);
}

void Dictionary::check_bounds(std::size_t src_size, std::size_t trg_size) const {
  for (const auto& [i, j] : pairs)
    if (i >= src_size || j >= trg_size)
      throw std::out_of_range("dictionary pair (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") out of vocabulary bounds");
}

void save_dictionary_tsv(const std::filesystem::path& path, const Dictionary& d,
                         const Vocabulary& src_vocab, const Vocabulary& trg_vocab) {
  d.check_bounds(src_vocab.size(), trg_vocab.size());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write dictionary: " + path.string());
  for (const auto& [i, j] : d.pairs) out << src_vocab.words[i] << '\t' << trg_vocab.words[j] << '\n';
}

Dictionary load_dictionary_tsv(const std::filesystem::path& path, const Vocabulary& src_vocab,
                               const Vocabulary& trg_vocab) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dictionary: " + path.string());
  Dictionary d;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                               ": expected \"<src>\\t<trg>\"");
    const std::string src = line.substr(0, tab);
    const std::string trg = line.substr(tab + 1);
    auto si = src_vocab.index.find(src);
    auto ti = trg_vocab.index.find(trg);
    if (si == src_vocab.index.end() || ti == trg_vocab.index.end())
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                               ": word not in vocabulary");
    d.pairs.emplace_back(si->second, ti->second);
  }
  d.dedup();
  return d;
}

}  // namespace crosslex
