#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "nclab/linked_partition.hpp"
#include "nclab/partition.hpp"
#include "nclab/permutation.hpp"

namespace nclab {

using Json = nlohmann::ordered_json;

/// "{1,2,4}"
std::string block_to_string(const std::vector<int>& block);

/// Blocks in canonical order with no separators: "{1,2,4}{3}{5,6}".
std::string to_text(const Partition& p);
std::string to_text(const LinkedPartition& p);
/// Cycle notation with fixed points left out, "()" for the identity:
/// "(1,2,3,4,5,6,7)(8,9,10,11)".
std::string cycle_notation(const Permutation& t);

/// {"n": 11, "blocks": [[1,2,4],[3],...]}; a "ground" array is added only
/// for partitions of a ground set other than {1..n}.
Json to_json(const Partition& p);
/// Same layout plus "linked": true.
Json to_json(const LinkedPartition& p);
/// {"n": k, "image": [...]}
Json to_json(const Permutation& t);

/// Parses "{..}{..}" into raw blocks without validating them.
std::vector<Block> parse_blocks(std::string_view text);

/// Accepts the text form (n = largest label) or the JSON form.
Partition parse_partition(std::string_view text);
LinkedPartition parse_linked(std::string_view text);

Partition partition_from_json(const Json& j);
LinkedPartition linked_from_json(const Json& j);
Permutation permutation_from_json(const Json& j);

}  // namespace nclab
