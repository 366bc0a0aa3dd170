#pragma once

#include <string>
#include <vector>

#include "laurent.hpp"

namespace cj {

struct NotAKnot : Error {
  explicit NotAKnot(const std::string& w) : Error(ErrorCode::not_a_knot, w) {}
};

/// A braid word: letter i stands for the generator sigma_i, -i for its
/// inverse. The closure must be a single-component link (a knot); the
/// constructor checks that the closure permutation is one cycle.
class BraidWord {
 public:
  BraidWord(int strands, std::vector<int> letters, std::string name = "");

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  const std::string& name() const { return name_; }
  int writhe() const;

  /// All letter signs reversed: the mirror knot.
  BraidWord mirrored() const;

  /// Permutation of strand positions induced by the word (bottom to top).
  std::vector<int> permutation() const;

 private:
  int strands_;
  std::vector<int> letters_;
  std::string name_;
};

/// One knot catalog entry parsed from a JSON-lines file.
struct CatalogEntry {
  std::string name;
  int strands = 0;
  std::vector<int> word;
};

std::vector<CatalogEntry> parse_catalog(const std::string& jsonl_text);
std::vector<CatalogEntry> load_catalog_file(const std::string& path);

/// The built-in catalog shipped with the library: unknot, 3_1, 4_1, 5_2, 6_1.
std::string builtin_catalog_jsonl();

}  // namespace cj
