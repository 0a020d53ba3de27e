#include "lss/envi_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

namespace lss {
namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool ends_with_hdr(const std::string& path) {
  return path.size() > 4 && lower(path.substr(path.size() - 4)) == ".hdr";
}

// Key = value pairs; values in { } may span lines. Keys are lowercased.
std::map<std::string, std::string> parse_header(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open header '" + path + "'");
  std::map<std::string, std::string> fields;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = lower(trim(line.substr(0, eq)));
    std::string value = trim(line.substr(eq + 1));
    if (!value.empty() && value.front() == '{') {
      while (value.find('}') == std::string::npos && std::getline(in, line))
        value += " " + trim(line);
      std::size_t close = value.find('}');
      if (close == std::string::npos)
        throw DataError("unterminated { } value for '" + key + "' in " + path);
      value = trim(value.substr(1, close - 1));
    }
    if (!key.empty()) fields[key] = value;
  }
  return fields;
}

long require_long(const std::map<std::string, std::string>& fields,
                  const std::string& key, const std::string& path) {
  auto it = fields.find(key);
  if (it == fields.end())
    throw DataError("header '" + path + "' is missing '" + key + "'");
  try {
    return std::stol(it->second);
  } catch (const std::exception&) {
    throw DataError("header field '" + key + "' is not an integer: " + it->second);
  }
}

std::vector<float> parse_float_list(const std::string& text) {
  std::vector<float> out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    out.push_back(std::stof(item));
  }
  return out;
}

std::size_t element_size(int data_type) {
  switch (data_type) {
    case 2: return 2;   // int16
    case 4: return 4;   // float32
    case 12: return 2;  // uint16
    default:
      throw DataError("unsupported data type " + std::to_string(data_type) +
                      " (supported: 2, 4, 12)");
  }
}

float convert(const unsigned char* p, int data_type) {
  switch (data_type) {
    case 2: {
      std::int16_t v;
      std::memcpy(&v, p, 2);
      return static_cast<float>(v);
    }
    case 12: {
      std::uint16_t v;
      std::memcpy(&v, p, 2);
      return static_cast<float>(v);
    }
    default: {
      float v;
      std::memcpy(&v, p, 4);
      return v;
    }
  }
}

std::size_t disk_index(Interleave il, long r, long c, long b, long rows,
                       long cols, long bands) {
  switch (il) {
    case Interleave::BSQ: return static_cast<std::size_t>((b * rows + r) * cols + c);
    case Interleave::BIL: return static_cast<std::size_t>((r * bands + b) * cols + c);
    case Interleave::BIP: return static_cast<std::size_t>((r * cols + c) * bands + b);
  }
  return 0;
}

std::string locate_data_file(const std::string& header_path,
                             const std::string& base) {
  namespace fs = std::filesystem;
  for (const std::string& candidate :
       {base, base + ".img", base + ".dat", base + ".raw"}) {
    if (!candidate.empty() && fs::exists(candidate) && candidate != header_path)
      return candidate;
  }
  throw DataError("no data file found for header '" + header_path + "'");
}

}  // namespace

HsiCube read_envi(const std::string& path) {
  if (path.empty()) throw DataError("empty ENVI path");
  std::string header_path, data_path;
  if (ends_with_hdr(path)) {
    header_path = path;
    data_path = locate_data_file(path, path.substr(0, path.size() - 4));
  } else {
    header_path = path + ".hdr";
    data_path = path;
    if (!std::filesystem::exists(data_path))
      throw DataError("no data file '" + data_path + "'");
  }

  auto fields = parse_header(header_path);
  long cols = require_long(fields, "samples", header_path);
  long rows = require_long(fields, "lines", header_path);
  long bands = require_long(fields, "bands", header_path);
  int data_type = static_cast<int>(require_long(fields, "data type", header_path));
  long byte_order = require_long(fields, "byte order", header_path);
  auto il_it = fields.find("interleave");
  if (il_it == fields.end())
    throw DataError("header '" + header_path + "' is missing 'interleave'");
  Interleave il = interleave_from_string(il_it->second);

  if (byte_order != 0)
    throw DataError("byte order " + std::to_string(byte_order) +
                    " not supported (little-endian required)");
  if (rows <= 0 || cols <= 0 || bands <= 0)
    throw DataError("header '" + header_path + "' declares non-positive dimensions");
  std::size_t elt = element_size(data_type);

  std::ifstream in(data_path, std::ios::binary);
  if (!in) throw DataError("cannot open data file '" + data_path + "'");
  in.seekg(0, std::ios::end);
  std::size_t file_size = static_cast<std::size_t>(in.tellg());
  in.seekg(0, std::ios::beg);
  std::size_t expected = static_cast<std::size_t>(rows) * cols * bands * elt;
  if (file_size != expected)
    throw DataError("data file '" + data_path + "' is " + std::to_string(file_size) +
                    " bytes, expected " + std::to_string(expected));

  std::vector<unsigned char> raw(file_size);
  in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(file_size));
  if (!in) throw DataError("short read from '" + data_path + "'");

  HsiCube cube(static_cast<int>(rows), static_cast<int>(cols), static_cast<int>(bands));
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c)
      for (long b = 0; b < bands; ++b)
        cube.at(static_cast<int>(r), static_cast<int>(c), static_cast<int>(b)) =
            convert(raw.data() + disk_index(il, r, c, b, rows, cols, bands) * elt,
                    data_type);

  auto wl_it = fields.find("wavelength");
  if (wl_it != fields.end()) cube.set_wavelengths(parse_float_list(wl_it->second));
  cube.validate();
  return cube;
}

void write_envi(const HsiCube& cube, const std::string& path, Interleave interleave) {
  if (path.empty()) throw DataError("empty ENVI path");
  cube.validate();
  std::string data_path = ends_with_hdr(path) ? path.substr(0, path.size() - 4) : path;
  std::string header_path = data_path + ".hdr";
  if (data_path.empty()) throw DataError("empty ENVI data path");

  long rows = cube.rows(), cols = cube.cols(), bands = cube.bands();
  std::vector<float> out(static_cast<std::size_t>(rows) * cols * bands);
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c)
      for (long b = 0; b < bands; ++b)
        out[disk_index(interleave, r, c, b, rows, cols, bands)] =
            cube.at(static_cast<int>(r), static_cast<int>(c), static_cast<int>(b));

  std::ofstream data(data_path, std::ios::binary);
  if (!data) throw DataError("cannot write '" + data_path + "'");
  data.write(reinterpret_cast<const char*>(out.data()),
             static_cast<std::streamsize>(out.size() * sizeof(float)));
  if (!data) throw DataError("short write to '" + data_path + "'");
  data.close();

  std::ofstream hdr(header_path);
  if (!hdr) throw DataError("cannot write '" + header_path + "'");
  hdr << "ENVI\n";
  hdr << "samples = " << cols << "\n";
  hdr << "lines = " << rows << "\n";
  hdr << "bands = " << bands << "\n";
  hdr << "data type = 4\n";
  hdr << "interleave = " << to_string(interleave) << "\n";
  hdr << "byte order = 0\n";
  if (!cube.wavelengths().empty()) {
    hdr << std::setprecision(9);
    hdr << "wavelength = { ";
    for (std::size_t i = 0; i < cube.wavelengths().size(); ++i) {
      if (i) hdr << ", ";
      hdr << cube.wavelengths()[i];
    }
    hdr << " }\n";
  }
  if (!hdr) throw DataError("short write to '" + header_path + "'");
}

}  // namespace lss
