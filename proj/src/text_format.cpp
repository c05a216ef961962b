#include "nclab/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace nclab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool looks_like_json(std::string_view s) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '{') return false;
  auto rest = trim(s.substr(1));
  return !rest.empty() && rest.front() == '"';
}

template <class Blocks>
Json blocks_json(std::span<const int> ground, bool standard, const Blocks& blocks) {
  Json j;
  j["n"] = ground.size();
  if (!standard) j["ground"] = std::vector<int>(ground.begin(), ground.end());
  j["blocks"] = blocks;
  return j;
}

struct RawJsonBlocks {
  std::vector<int> ground;
  std::vector<Block> blocks;
};

RawJsonBlocks read_blocks_json(const Json& j) {
  try {
    RawJsonBlocks raw;
    auto n = j.at("n").get<int>();
    raw.ground = j.contains("ground") ? j.at("ground").get<std::vector<int>>() : standard_ground(n);
    if (static_cast<int>(raw.ground.size()) != n) throw ParseError("\"ground\" does not have n elements");
    raw.blocks = j.at("blocks").get<std::vector<Block>>();
    return raw;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON object: ") + e.what());
  }
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

int largest_label(const std::vector<Block>& blocks) {
  int n = 0;
  for (const auto& b : blocks) {
    for (int x : b) n = std::max(n, x);
  }
  if (n < 1) throw ParseError("no elements given");
  return n;
}

}  // namespace

std::string block_to_string(const std::vector<int>& block) {
  std::string out = "{";
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(block[i]);
  }
  out += '}';
  return out;
}

std::string to_text(const Partition& p) {
  std::string out;
  for (const auto& b : p.blocks()) out += block_to_string(b);
  return out;
}

std::string to_text(const LinkedPartition& p) {
  std::string out;
  for (const auto& b : p.blocks()) out += block_to_string(b);
  return out;
}

std::string cycle_notation(const Permutation& t) {
  std::string out;
  for (const auto& cycle : t.cycles()) {
    if (cycle.size() < 2) continue;
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Json to_json(const Partition& p) { return blocks_json(p.ground(), p.standard_ground(), p.blocks()); }

Json to_json(const LinkedPartition& p) {
  Json j = blocks_json(p.ground(), p.standard_ground(), p.blocks());
  j["linked"] = true;
  return j;
}

Json to_json(const Permutation& t) {
  Json j;
  j["n"] = t.size();
  j["image"] = std::vector<int>(t.image().begin(), t.image().end());
  return j;
}

std::vector<Block> parse_blocks(std::string_view text) {
  std::vector<Block> blocks;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError(what + " at offset " + std::to_string(i) + " in \"" + std::string(text) + "\"");
  };
  skip_ws();
  if (i == text.size()) throw fail("empty input");
  while (i < text.size()) {
    if (text[i] != '{') throw fail("expected '{'");
    ++i;
    Block blk;
    skip_ws();
    if (i < text.size() && text[i] == '}') {
      ++i;
      blocks.push_back(std::move(blk));
      skip_ws();
      continue;
    }
    while (true) {
      skip_ws();
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc{} || ptr == text.data() + i) throw fail("expected an integer");
      i = static_cast<std::size_t>(ptr - text.data());
      if (value < 1) throw fail("labels must be positive");
      blk.push_back(value);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == '}') {
        ++i;
        break;
      }
      throw fail("expected ',' or '}'");
    }
    blocks.push_back(std::move(blk));
    skip_ws();
  }
  return blocks;
}

Partition parse_partition(std::string_view text) {
  if (looks_like_json(text)) return partition_from_json(parse_json(text));
  auto blocks = parse_blocks(text);
  int n = largest_label(blocks);
  return make_partition(n, std::move(blocks));
}

LinkedPartition parse_linked(std::string_view text) {
  if (looks_like_json(text)) return linked_from_json(parse_json(text));
  auto blocks = parse_blocks(text);
  int n = largest_label(blocks);
  return make_linked(n, std::move(blocks));
}

Partition partition_from_json(const Json& j) {
  auto raw = read_blocks_json(j);
  return Partition(std::move(raw.ground), std::move(raw.blocks));
}

LinkedPartition linked_from_json(const Json& j) {
  auto raw = read_blocks_json(j);
  return LinkedPartition(std::move(raw.ground), std::move(raw.blocks));
}

Permutation permutation_from_json(const Json& j) {
  try {
    auto n = j.at("n").get<std::size_t>();
    auto image = j.at("image").get<std::vector<int>>();
    if (image.size() != n) throw ParseError("\"image\" does not have n entries");
    return Permutation(std::move(image));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad permutation JSON: ") + e.what());
  }
}

}  // namespace nclab
