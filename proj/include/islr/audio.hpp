#pragma once

#include <cstddef>
#include <vector>

#include "islr/solver.hpp"

namespace islr {

// Frequency bins (0..nfft/2) by frames. hop is pinned to window_len/2; with
// the square-root Hann window used for both analysis and synthesis the
// squared windows at 50% overlap sum to exactly 1, so istft(stft(x)) == x up
// to DFT roundoff.
struct Spectrogram {
  CMat data;  // (nfft/2 + 1) x frames
  int window_len = 64;
  int hop = 32;
  int nfft = 512;
  std::size_t signal_len = 0;
};

Spectrogram stft(const std::vector<double>& signal, int window_len = 64, int hop = 32,
                 int nfft = 512);

std::vector<double> istft(const Spectrogram& spec);

enum class DenoiseMode { complex_spectrogram, magnitude };

// x -> istft(solve(stft(x))). complex_spectrogram solves on the complex
// matrix directly; magnitude solves on |S| and reattaches the input phase.
std::vector<double> denoise_speech(const std::vector<double>& signal, const SolverConfig& cfg,
                                   DenoiseMode mode = DenoiseMode::complex_spectrogram);

}  // namespace islr
