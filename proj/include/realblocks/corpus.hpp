#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "realblocks/perm_group.hpp"

namespace realblocks {

/// One line of a corpus file:
///   name | degree | gen;gen;... | p,p [| key=value ...]
/// Recognized keys: order (declared group order), tags (comma list).
struct CorpusEntry {
  std::string name;
  std::size_t degree = 0;
  std::vector<std::string> generators;
  std::vector<std::uint32_t> primes;
  std::optional<std::uint64_t> order;
  std::vector<std::string> tags;
  std::size_t line = 0;

  /// Parses the generators and checks the declared order; throws InputError.
  PermGroup group() const;
  /// The entry line in corpus syntax.
  std::string to_line() const;
};

CorpusEntry parse_corpus_line(const std::string& line, std::size_t line_number);
std::vector<CorpusEntry> parse_corpus(const std::string& text);
/// Throws InputError when the file cannot be read, ParseError on bad lines
/// and duplicate names.
std::vector<CorpusEntry> load_corpus(const std::string& path);

/// A pair D < E from the shipped list, with E in its regular representation.
struct DefectPairEntry {
  std::string name;
  PermGroup e;
  PermGroup d;
};

std::vector<DefectPairEntry> load_defect_pairs(const std::string& path);
/// data/defect_pairs.txt inside the source tree.
std::string default_defect_pairs_path();
std::string data_path(const std::string& file);

}  // namespace realblocks
