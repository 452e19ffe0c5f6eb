#include "islr/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "islr/errors.hpp"

namespace islr {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  // A trailing newline produces one empty tail entry; drop it.
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::vector<std::string> split_on(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t end = line.find(sep, start);
    if (end == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, end - start));
    start = end + 1;
  }
  return fields;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// Locale-independent; the whole (trimmed) field must be consumed.
bool parse_double(const std::string& field, double& out) {
  std::string t = trim(field);
  if (t.empty()) return false;
  const char* begin = t.data();
  if (*begin == '+') ++begin;  // from_chars rejects an explicit plus
  const char* end = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

Mat read_matrix_csv(const std::string& path) {
  const std::vector<std::string> lines = split_lines(slurp(path));
  if (lines.empty()) throw ParseError(path, 1, 1, "empty file");

  std::size_t first_data = 0;
  {
    double v;
    for (const std::string& field : split_on(lines[0], ',')) {
      if (!parse_double(field, v)) {
        first_data = 1;  // non-numeric first row: header
        break;
      }
    }
  }
  if (first_data >= lines.size()) throw ParseError(path, 1, 1, "no data rows after header");

  const std::size_t rows = lines.size() - first_data;
  std::size_t cols = 0;
  Mat M;
  for (std::size_t r = 0; r < rows; ++r) {
    const long file_row = static_cast<long>(first_data + r + 1);
    const std::vector<std::string> fields = split_on(lines[first_data + r], ',');
    if (r == 0) {
      cols = fields.size();
      M.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    } else if (fields.size() != cols) {
      throw RaggedRows(path + ":" + std::to_string(file_row) + ": expected " +
                       std::to_string(cols) + " fields, got " + std::to_string(fields.size()));
    }
    for (std::size_t cidx = 0; cidx < cols; ++cidx) {
      double v;
      if (!parse_double(fields[cidx], v))
        throw ParseError(path, file_row, static_cast<long>(cidx + 1),
                         "not a number: '" + trim(fields[cidx]) + "'");
      M(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(cidx)) = v;
    }
  }
  return M;
}

void write_matrix_csv(const Mat& M, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoFailure("cannot open " + path + " for writing");
  char buf[64];
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", M(i, j));
      if (j) out << ',';
      out << buf;
    }
    out << '\n';
  }
  if (!out) throw IoFailure("write failed: " + path);
}

GraphData read_edge_list(const std::string& path) {
  const std::vector<std::string> lines = split_lines(slurp(path));

  GraphData g;
  std::unordered_map<std::string, std::size_t> index;
  auto node_id = [&](const std::string& name) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    const std::size_t id = g.edges.node_names.size();
    index.emplace(name, id);
    g.edges.node_names.push_back(name);
    return id;
  };

  struct RawEdge {
    std::size_t a, b;
    double w;
  };
  std::vector<RawEdge> raw;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const long file_row = static_cast<long>(li + 1);
    const std::string stripped = trim(lines[li]);
    if (stripped.empty() || stripped[0] == '#') continue;
    const std::vector<std::string> fields = split_on(lines[li], '\t');
    if (fields.size() != 3)
      throw ParseError(path, file_row, static_cast<long>(fields.size()),
                       "expected node_a<TAB>node_b<TAB>weight");
    const std::string a = trim(fields[0]);
    const std::string b = trim(fields[1]);
    if (a.empty() || b.empty())
      throw ParseError(path, file_row, a.empty() ? 1 : 2, "empty node name");
    double w;
    if (!parse_double(fields[2], w))
      throw ParseError(path, file_row, 3, "not a number: '" + trim(fields[2]) + "'");
    if (w < 0.0 || w > 2.0)
      g.edges.warnings.push_back("line " + std::to_string(file_row) + ": weight " +
                                 std::to_string(w) + " outside [0,2]");
    g.edges.edges.push_back({a, b, w});
    raw.push_back({node_id(a), node_id(b), w});
  }
  if (raw.empty()) throw ParseError(path, 1, 1, "no edges found");

  const Eigen::Index n = static_cast<Eigen::Index>(g.edges.node_names.size());
  g.adjacency = Mat::Zero(n, n);
  for (const RawEdge& e : raw) {
    g.adjacency(static_cast<Eigen::Index>(e.a), static_cast<Eigen::Index>(e.b)) = e.w;
    g.adjacency(static_cast<Eigen::Index>(e.b), static_cast<Eigen::Index>(e.a)) = e.w;
  }
  return g;
}

namespace {

std::uint32_t read_u32(const std::string& b, std::size_t at) {
  return static_cast<std::uint32_t>(static_cast<unsigned char>(b[at])) |
         (static_cast<std::uint32_t>(static_cast<unsigned char>(b[at + 1])) << 8) |
         (static_cast<std::uint32_t>(static_cast<unsigned char>(b[at + 2])) << 16) |
         (static_cast<std::uint32_t>(static_cast<unsigned char>(b[at + 3])) << 24);
}

std::uint16_t read_u16(const std::string& b, std::size_t at) {
  return static_cast<std::uint16_t>(static_cast<unsigned char>(b[at]) |
                                    (static_cast<unsigned char>(b[at + 1]) << 8));
}

void put_u32(std::string& b, std::uint32_t v) {
  b.push_back(static_cast<char>(v & 0xff));
  b.push_back(static_cast<char>((v >> 8) & 0xff));
  b.push_back(static_cast<char>((v >> 16) & 0xff));
  b.push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_u16(std::string& b, std::uint16_t v) {
  b.push_back(static_cast<char>(v & 0xff));
  b.push_back(static_cast<char>((v >> 8) & 0xff));
}

}  // namespace

WavData read_wav(const std::string& path) {
  const std::string bytes = slurp(path);
  if (bytes.size() < 12 || bytes.compare(0, 4, "RIFF") != 0 || bytes.compare(8, 4, "WAVE") != 0)
    throw UnsupportedFormat(path + ": not a RIFF/WAVE file");

  bool have_fmt = false;
  WavData wav;
  std::size_t data_at = 0, data_size = 0;
  bool have_data = false;

  std::size_t at = 12;
  while (at + 8 <= bytes.size()) {
    const std::string id = bytes.substr(at, 4);
    const std::uint32_t size = read_u32(bytes, at + 4);
    at += 8;
    if (at + size > bytes.size())
      throw UnsupportedFormat(path + ": truncated chunk '" + id + "'");
    if (id == "fmt ") {
      if (size < 16) throw UnsupportedFormat(path + ": fmt chunk too short");
      const std::uint16_t format = read_u16(bytes, at);
      const std::uint16_t channels = read_u16(bytes, at + 2);
      const std::uint32_t rate = read_u32(bytes, at + 4);
      const std::uint16_t bits = read_u16(bytes, at + 14);
      if (format != 1 || bits != 16)
        throw UnsupportedFormat(path + ": only 16-bit PCM is supported");
      if (channels != 1) throw UnsupportedFormat(path + ": only mono is supported");
      wav.sample_rate = static_cast<int>(rate);
      have_fmt = true;
    } else if (id == "data") {
      data_at = at;
      data_size = size;
      have_data = true;
    }
    at += size + (size % 2);  // chunks are word-aligned
  }

  if (!have_fmt) throw UnsupportedFormat(path + ": missing fmt chunk");
  if (!have_data) throw UnsupportedFormat(path + ": missing data chunk");
  if (data_size == 0) throw UnsupportedFormat(path + ": empty data chunk");
  if (data_size % 2 != 0) throw UnsupportedFormat(path + ": odd data chunk size");

  wav.samples.resize(data_size / 2);
  for (std::size_t i = 0; i < wav.samples.size(); ++i) {
    const std::int16_t s = static_cast<std::int16_t>(read_u16(bytes, data_at + 2 * i));
    wav.samples[i] = static_cast<double>(s) / 32768.0;
  }
  return wav;
}

void write_wav(const std::vector<double>& samples, int sample_rate, const std::string& path) {
  if (samples.empty()) throw BadParams("write_wav: no samples");
  if (sample_rate <= 0) throw BadParams("write_wav: sample rate must be positive");

  const std::uint32_t data_size = static_cast<std::uint32_t>(samples.size() * 2);
  std::string out;
  out.reserve(44 + data_size);
  out += "RIFF";
  put_u32(out, 36 + data_size);
  out += "WAVEfmt ";
  put_u32(out, 16);
  put_u16(out, 1);  // PCM
  put_u16(out, 1);  // mono
  put_u32(out, static_cast<std::uint32_t>(sample_rate));
  put_u32(out, static_cast<std::uint32_t>(sample_rate) * 2);  // byte rate
  put_u16(out, 2);                                            // block align
  put_u16(out, 16);                                           // bits
  out += "data";
  put_u32(out, data_size);
  for (double v : samples) {
    long q = std::lround(v * 32768.0);
    if (q > 32767) q = 32767;
    if (q < -32768) q = -32768;
    put_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
  }

  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoFailure("cannot open " + path + " for writing");
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) throw IoFailure("write failed: " + path);
}

}  // namespace islr
