#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nilary/ring.hpp"

namespace nilary {

struct CorpusEntry {
  std::string spec;
  std::shared_ptr<const Ring> ring;
};

struct Corpus {
  std::vector<CorpusEntry> entries;
  Caps caps;

  std::size_t size() const noexcept { return entries.size(); }
  bool empty() const noexcept { return entries.empty(); }
  std::vector<std::string> labels() const;
};

// Z_n (n <= 30), Z_a + Z_b (2 <= a <= b <= 6), zero-multiplication rings of
// order <= 8, M_2(Z_2), upper-triangular T_2(Z_2) and T_2(Z_3), and two
// quotients of Z_12.
std::vector<std::string> builtin_specs();

// Builds the builtin corpus, silently dropping members beyond caps.max_order.
Corpus build_builtin_corpus(const Caps& caps = {});

// Parses every spec up front; the first failure propagates.
Corpus build_corpus(const std::vector<std::string>& specs, const Caps& caps = {});

// Corpus file: either a JSON array of spec strings or an object
// {"rings": [...], "max_order": n, "lattice_order": n, "lattice_count": n}.
// Caps from the file override the given defaults.
Corpus load_corpus_file(const std::string& path, Caps defaults = {});
Corpus parse_corpus_json(const std::string& text, Caps defaults = {});

}  // namespace nilary
