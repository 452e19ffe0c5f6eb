#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "islr/errors.hpp"
#include "islr/io.hpp"
#include "islr/rng.hpp"

using islr::Mat;

namespace {

std::filesystem::path scratch_file(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "islr_io_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string put(const std::string& name, const std::string& content) {
  const auto p = scratch_file(name);
  std::ofstream out(p, std::ios::binary);
  out << content;
  return p.string();
}

std::vector<std::uint8_t> slurp_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("matrix csv reading") {
  const Mat M = islr::read_matrix_csv(put("plain.csv", "1,2\n3,4\n"));
  REQUIRE(M.rows() == 2);
  REQUIRE(M.cols() == 2);
  CHECK(M(0, 0) == 1.0);
  CHECK(M(0, 1) == 2.0);
  CHECK(M(1, 0) == 3.0);
  CHECK(M(1, 1) == 4.0);

  // header auto-detection, missing trailing newline, CRLF endings
  const Mat H = islr::read_matrix_csv(put("header.csv", "col_a,col_b\r\n1.5,-2e3\r\n0,.25"));
  REQUIRE(H.rows() == 2);
  CHECK(H(0, 1) == -2000.0);
  CHECK(H(1, 1) == 0.25);

  CHECK_THROWS_AS(islr::read_matrix_csv(put("ragged.csv", "1,2\n3\n")), islr::RaggedRows);
  CHECK_THROWS_AS(islr::read_matrix_csv(put("empty.csv", "")), islr::ParseError);
  CHECK_THROWS_AS(islr::read_matrix_csv(put("headonly.csv", "a,b\n")), islr::ParseError);
  CHECK_THROWS_AS(islr::read_matrix_csv(scratch_file("missing.csv").string()),
                  islr::IoFailure);

  try {
    islr::read_matrix_csv(put("bad.csv", "1,2\n3,oops\n"));
    FAIL("expected ParseError");
  } catch (const islr::ParseError& e) {
    CHECK(e.row == 2);
    CHECK(e.col == 2);
  }
}

TEST_CASE("matrix csv write/read round-trip is exact") {
  islr::Rng rng(55);
  Mat M(50, 40);
  for (int j = 0; j < 40; ++j)
    for (int i = 0; i < 50; ++i) M(i, j) = rng.normal() * std::pow(10.0, rng.uniform(-8, 8));
  const std::string path = scratch_file("roundtrip.csv").string();
  islr::write_matrix_csv(M, path);
  const Mat back = islr::read_matrix_csv(path);
  REQUIRE(back.rows() == 50);
  REQUIRE(back.cols() == 40);
  CHECK((back - M).cwiseAbs().maxCoeff() == 0.0);

  // deterministic bytes
  const std::string path2 = scratch_file("roundtrip2.csv").string();
  islr::write_matrix_csv(M, path2);
  CHECK(slurp_bytes(path) == slurp_bytes(path2));

  CHECK_THROWS_AS(islr::write_matrix_csv(M, "/nonexistent_dir_zz/x.csv"), islr::IoFailure);
}

TEST_CASE("edge list reading") {
  const std::string body =
      "# protein interaction scores\n"
      "\n"
      "alpha\tbeta\t1.5\n"
      "beta\tgamma\t0.25\n";
  const islr::GraphData g = islr::read_edge_list(put("edges.tsv", body));
  REQUIRE(g.edges.node_names.size() == 3);
  CHECK(g.edges.node_names[0] == "alpha");
  CHECK(g.edges.node_names[1] == "beta");
  CHECK(g.edges.node_names[2] == "gamma");
  REQUIRE(g.adjacency.rows() == 3);
  CHECK(g.adjacency(0, 1) == 1.5);
  CHECK(g.adjacency(1, 0) == 1.5);
  CHECK(g.adjacency(1, 2) == 0.25);
  CHECK(g.adjacency(2, 1) == 0.25);
  CHECK(g.adjacency(0, 2) == 0.0);
  CHECK(g.adjacency(0, 0) == 0.0);
  int nonzeros = 0;
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i)
      if (g.adjacency(i, j) != 0.0) ++nonzeros;
  CHECK(nonzeros == 4);
  CHECK(g.edges.warnings.empty());

  const islr::GraphData loop = islr::read_edge_list(put("loop.tsv", "n\tn\t0.7\n"));
  CHECK(loop.adjacency(0, 0) == 0.7);

  const islr::GraphData dup =
      islr::read_edge_list(put("dup.tsv", "a\tb\t1.0\nb\ta\t0.5\n"));
  CHECK(dup.adjacency(0, 1) == 0.5);
  CHECK(dup.adjacency(1, 0) == 0.5);

  const islr::GraphData warn = islr::read_edge_list(put("warn.tsv", "a\tb\t2.5\n"));
  REQUIRE(warn.edges.warnings.size() == 1);
  CHECK(warn.adjacency(0, 1) == 2.5);

  CHECK_THROWS_AS(islr::read_edge_list(put("noedges.tsv", "# nothing\n")), islr::ParseError);
  CHECK_THROWS_AS(islr::read_edge_list(put("twofields.tsv", "a\tb\n")), islr::ParseError);
  CHECK_THROWS_AS(islr::read_edge_list(put("badweight.tsv", "a\tb\tx\n")), islr::ParseError);
}

TEST_CASE("wav round-trip within one quantization step") {
  const int rate = 8000;
  std::vector<double> tone(2000);
  for (int n = 0; n < 2000; ++n)
    tone[n] = 0.6 * std::sin(2.0 * 3.14159265358979323846 * 440.0 * n / rate);

  const std::string path = scratch_file("tone.wav").string();
  islr::write_wav(tone, rate, path);
  const islr::WavData back = islr::read_wav(path);
  CHECK(back.sample_rate == rate);
  REQUIRE(back.samples.size() == tone.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < tone.size(); ++i)
    worst = std::max(worst, std::abs(back.samples[i] - tone[i]));
  CHECK(worst <= std::pow(2.0, -15.0));

  // out-of-range samples clamp instead of wrapping
  islr::write_wav({1.5, -2.0, 0.0}, rate, path);
  const islr::WavData clamped = islr::read_wav(path);
  CHECK(clamped.samples[0] == doctest::Approx(32767.0 / 32768.0).epsilon(1e-12));
  CHECK(clamped.samples[1] == -1.0);
  CHECK(clamped.samples[2] == 0.0);

  CHECK_THROWS_AS(islr::write_wav({}, rate, path), islr::BadParams);
  CHECK_THROWS_AS(islr::write_wav({0.0}, 0, path), islr::BadParams);
}

TEST_CASE("wav reader rejects what it cannot represent") {
  // header template: RIFF size, "WAVE", fmt chunk (PCM, channels, rate,
  // byte rate, block align, bits), data chunk
  const auto wav_bytes = [](std::uint16_t format, std::uint16_t channels,
                            std::uint16_t bits, std::uint32_t data_size) {
    std::vector<std::uint8_t> b;
    auto u16 = [&](std::uint16_t v) {
      b.push_back(v & 0xff);
      b.push_back(v >> 8);
    };
    auto u32 = [&](std::uint32_t v) {
      for (int i = 0; i < 4; ++i) b.push_back((v >> (8 * i)) & 0xff);
    };
    auto tag = [&](const char* t) { b.insert(b.end(), t, t + 4); };
    tag("RIFF");
    u32(36 + data_size);
    tag("WAVE");
    tag("fmt ");
    u32(16);
    u16(format);
    u16(channels);
    u32(8000);
    u32(8000u * channels * bits / 8);
    u16(channels * bits / 8);
    u16(bits);
    tag("data");
    u32(data_size);
    for (std::uint32_t i = 0; i < data_size; ++i) b.push_back(0);
    return b;
  };
  const auto put_bytes = [](const std::string& name, const std::vector<std::uint8_t>& b) {
    const auto p = scratch_file(name);
    std::ofstream out(p, std::ios::binary);
    out.write(reinterpret_cast<const char*>(b.data()), static_cast<std::streamsize>(b.size()));
    return p.string();
  };

  CHECK_THROWS_AS(islr::read_wav(put_bytes("stereo.wav", wav_bytes(1, 2, 16, 8))),
                  islr::UnsupportedFormat);
  CHECK_THROWS_AS(islr::read_wav(put_bytes("float32.wav", wav_bytes(3, 1, 32, 8))),
                  islr::UnsupportedFormat);
  CHECK_THROWS_AS(islr::read_wav(put_bytes("pcm8.wav", wav_bytes(1, 1, 8, 8))),
                  islr::UnsupportedFormat);
  CHECK_THROWS_AS(islr::read_wav(put_bytes("nodata.wav", wav_bytes(1, 1, 16, 0))),
                  islr::UnsupportedFormat);
  CHECK_THROWS_AS(islr::read_wav(put("notriff.wav", "this is not audio")),
                  islr::UnsupportedFormat);
  CHECK_THROWS_AS(islr::read_wav(scratch_file("absent.wav").string()), islr::IoFailure);

  // a good minimal file still reads
  auto ok = wav_bytes(1, 1, 16, 4);
  const islr::WavData w = islr::read_wav(put_bytes("ok.wav", ok));
  CHECK(w.sample_rate == 8000);
  CHECK(w.samples.size() == 2);
}
