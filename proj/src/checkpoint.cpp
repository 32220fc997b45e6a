#include "burau4/checkpoint.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <boost/crc.hpp>

namespace burau4 {

namespace {

constexpr std::string_view kMagic = "burau4-search-checkpoint 1";

std::uint32_t crc_of(std::string_view body) {
  boost::crc_32_type crc;
  crc.process_bytes(body.data(), body.size());
  return crc.checksum();
}

std::string hex8(std::uint32_t v) {
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", v);
  return buf;
}

[[noreturn]] void corrupt(const std::string& why) {
  throw CheckpointCorrupt("checkpoint corrupt: " + why);
}

template <typename T>
T read_field(std::istringstream& in, std::string_view key) {
  std::string line;
  if (!std::getline(in, line)) {
    corrupt("missing field '" + std::string(key) + "'");
  }
  std::istringstream ls(line);
  std::string name;
  T value{};
  if (!(ls >> name >> value) || name != key || !(ls >> std::ws).eof()) {
    corrupt("bad field line '" + line + "', expected '" + std::string(key) + "'");
  }
  return value;
}

}  // namespace

std::string serialize_checkpoint(const SearchCheckpoint& cp) {
  std::ostringstream body;
  body << "max_k " << cp.max_k << '\n'
       << "dedup " << (cp.dedup ? 1 : 0) << '\n'
       << "next_k " << cp.next_k << '\n'
       << "next_rank " << cp.next_rank << '\n';
  for (std::size_t k = 0; k < cp.per_k.size(); ++k) {
    const auto& l = cp.per_k[k];
    body << "level " << k << ' ' << l.sequences << ' ' << l.hits << ' ' << l.other_scalars
         << '\n';
  }
  body << "dedup_classes " << cp.dedup_classes << '\n' << "collisions " << cp.collisions << '\n';
  std::string b = body.str();
  return std::string(kMagic) + "\ncrc32 " + hex8(crc_of(b)) + "\n" + b;
}

SearchCheckpoint parse_checkpoint(std::string_view text) {
  auto nl1 = text.find('\n');
  if (nl1 == std::string_view::npos || text.substr(0, nl1) != kMagic) {
    corrupt("bad header");
  }
  auto nl2 = text.find('\n', nl1 + 1);
  if (nl2 == std::string_view::npos) {
    corrupt("missing checksum line");
  }
  std::string_view crc_line = text.substr(nl1 + 1, nl2 - nl1 - 1);
  std::string_view body = text.substr(nl2 + 1);
  if (crc_line.size() != 14 || crc_line.substr(0, 6) != "crc32 " ||
      crc_line.substr(6) != hex8(crc_of(body))) {
    corrupt("checksum mismatch");
  }

  std::istringstream in{std::string(body)};
  SearchCheckpoint cp;
  cp.max_k = read_field<int>(in, "max_k");
  int dedup = read_field<int>(in, "dedup");
  if (dedup != 0 && dedup != 1) {
    corrupt("dedup flag must be 0 or 1");
  }
  cp.dedup = dedup == 1;
  cp.next_k = read_field<int>(in, "next_k");
  cp.next_rank = read_field<std::uint64_t>(in, "next_rank");
  if (cp.max_k < 0 || cp.next_k < 0 || cp.next_k > cp.max_k + 1) {
    corrupt("position out of range");
  }

  std::string line;
  while (in.peek() == 'l' && std::getline(in, line)) {
    std::istringstream ls(line);
    std::string name;
    std::size_t k = 0;
    LevelTotals l;
    if (!(ls >> name >> k >> l.sequences >> l.hits >> l.other_scalars) || name != "level" ||
        k != cp.per_k.size()) {
      corrupt("bad level line '" + line + "'");
    }
    cp.per_k.push_back(l);
  }
  cp.dedup_classes = read_field<std::uint64_t>(in, "dedup_classes");
  cp.collisions = read_field<std::uint64_t>(in, "collisions");
  if (in.peek() != std::char_traits<char>::eof()) {
    corrupt("trailing data");
  }
  return cp;
}

void write_checkpoint(const std::filesystem::path& path, const SearchCheckpoint& cp) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot write checkpoint " + tmp.string());
    }
    out << serialize_checkpoint(cp);
    if (!out.flush()) {
      throw std::runtime_error("cannot write checkpoint " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

SearchCheckpoint read_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open checkpoint " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_checkpoint(ss.str());
}

}  // namespace burau4
