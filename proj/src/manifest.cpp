#include "lss/manifest.hpp"

#include <fstream>
#include <sstream>

#include "lss/error.hpp"

namespace lss {

void RunManifest::add(const std::string& key, const std::string& value) {
  entries_.emplace_back(key, value);
}

void RunManifest::add(const std::string& key, long long value) {
  entries_.emplace_back(key, std::to_string(value));
}

void RunManifest::add(const std::string& key, double value) {
  std::ostringstream ss;
  ss.precision(17);
  ss << value;
  entries_.emplace_back(key, ss.str());
}

void RunManifest::add_input(const std::string& label, const std::string& path) {
  std::ostringstream ss;
  ss << std::hex << fnv1a64_file(path);
  entries_.emplace_back("input." + label + ".digest", ss.str());
}

void RunManifest::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write manifest '" + path + "'");
  for (const auto& [key, value] : entries_) out << key << " = " << value << "\n";
  if (!out) throw DataError("short write to manifest '" + path + "'");
}

std::uint64_t fnv1a64_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "' for digest");
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  char buffer[1 << 16];
  while (in.read(buffer, sizeof buffer) || in.gcount() > 0) {
    std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      hash ^= static_cast<unsigned char>(buffer[i]);
      hash *= 0x100000001b3ULL;
    }
    if (!in) break;
  }
  return hash;
}

}  // namespace lss
