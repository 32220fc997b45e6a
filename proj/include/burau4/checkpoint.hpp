#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace burau4 {

class CheckpointCorrupt : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LevelTotals {
  std::uint64_t sequences = 0;
  std::uint64_t hits = 0;
  std::uint64_t other_scalars = 0;
  bool operator==(const LevelTotals&) const = default;
};

/// Resume point of a search.  Every sequence ordered before
/// (next_k, next_rank) in length-then-lexicographic order has been emitted.
///
/// File format, one field per line:
///
///   burau4-search-checkpoint 1
///   crc32 <8 lowercase hex digits over every following byte>
///   max_k <int>
///   dedup <0|1>
///   next_k <int>
///   next_rank <uint>
///   level <k> <sequences> <hits> <other_scalars>     (one line per k)
///   dedup_classes <uint>
///   collisions <uint>
struct SearchCheckpoint {
  int                      max_k = 0;
  bool                     dedup = false;
  int                      next_k = 0;
  std::uint64_t            next_rank = 0;
  std::vector<LevelTotals> per_k;
  std::uint64_t            dedup_classes = 0;
  std::uint64_t            collisions = 0;
  bool operator==(const SearchCheckpoint&) const = default;
};

std::string serialize_checkpoint(const SearchCheckpoint& cp);
SearchCheckpoint parse_checkpoint(std::string_view text);

// Writes to a sibling temp file and renames over the target.
void write_checkpoint(const std::filesystem::path& path, const SearchCheckpoint& cp);
SearchCheckpoint read_checkpoint(const std::filesystem::path& path);

}  // namespace burau4
