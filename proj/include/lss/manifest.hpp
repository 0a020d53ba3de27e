#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lss {

// Flat key-value record of one CLI run, written next to the primary output.
class RunManifest {
 public:
  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, long long value);
  void add(const std::string& key, double value);
  // Records input.<label>.digest = fnv1a64 of the file bytes.
  void add_input(const std::string& label, const std::string& path);

  void write(const std::string& path) const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

std::uint64_t fnv1a64_file(const std::string& path);

}  // namespace lss
