#include "braid.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace cj {

namespace {
using nlohmann::json;
}

BraidWord::BraidWord(int strands, std::vector<int> letters, std::string name)
    : strands_(strands), letters_(std::move(letters)), name_(std::move(name)) {
  if (strands_ < 2) throw Error(ErrorCode::usage, "braid needs at least 2 strands");
  for (int l : letters_) {
    if (l == 0 || std::abs(l) >= strands_) {
      throw Error(ErrorCode::usage, "braid letter out of range: " + std::to_string(l));
    }
  }
  // the closure is a knot iff the permutation is a single cycle
  std::vector<int> perm = permutation();
  int seen = 0, pos = 0;
  do {
    pos = perm[pos];
    ++seen;
  } while (pos != 0 && seen <= strands_);
  if (seen != strands_) {
    throw NotAKnot("closure of braid '" + name_ + "' has more than one component");
  }
}

int BraidWord::writhe() const {
  int w = 0;
  for (int l : letters_) w += (l > 0) ? 1 : -1;
  return w;
}

BraidWord BraidWord::mirrored() const {
  std::vector<int> flipped(letters_.size());
  for (size_t i = 0; i < letters_.size(); ++i) flipped[i] = -letters_[i];
  return BraidWord(strands_, flipped, name_.empty() ? "" : name_ + "!");
}

std::vector<int> BraidWord::permutation() const {
  std::vector<int> perm(strands_);
  std::iota(perm.begin(), perm.end(), 0);
  for (int l : letters_) {
    int i = std::abs(l) - 1;
    std::swap(perm[i], perm[i + 1]);
  }
  return perm;
}

std::vector<CatalogEntry> parse_catalog(const std::string& jsonl_text) {
  std::vector<CatalogEntry> out;
  std::istringstream in(jsonl_text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j = json::parse(line);
    CatalogEntry e;
    e.name = j.at("name").get<std::string>();
    e.strands = j.at("strands").get<int>();
    e.word = j.at("word").get<std::vector<int>>();
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open catalog file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

std::string builtin_catalog_jsonl() {
  return R"({"name": "0_1", "strands": 2, "word": [1]}
{"name": "3_1", "strands": 2, "word": [1, 1, 1]}
{"name": "4_1", "strands": 3, "word": [1, -2, 1, -2]}
{"name": "5_2", "strands": 3, "word": [1, 1, 1, 2, -1, 2]}
{"name": "6_1", "strands": 4, "word": [1, 1, 2, -1, -3, 2, -3]}
)";
}

}  // namespace cj
