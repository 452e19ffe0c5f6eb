#include "islr/audio.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <cstring>

#include "islr/errors.hpp"

namespace islr {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Square-root Hann, used for analysis and synthesis alike: with 50% overlap
// w^2(n) + w^2(n + L/2) = 1 exactly, which is what makes the round trip an
// identity.
std::vector<double> sqrt_hann(int len) {
  std::vector<double> w(len);
  for (int n = 0; n < len; ++n) w[n] = std::sin(kPi * n / len);
  return w;
}

void check_geometry(int window_len, int hop, int nfft) {
  if (window_len < 2 || window_len % 2 != 0)
    throw BadParams("stft: window_len must be a positive even number");
  if (hop * 2 != window_len) throw BadParams("stft: hop must equal window_len/2");
  if (nfft < window_len) throw BadParams("stft: nfft must be at least window_len");
}

std::size_t frame_count(std::size_t signal_len, int hop) {
  return (signal_len + hop - 1) / hop + 1;
}

}  // namespace

Spectrogram stft(const std::vector<double>& signal, int window_len, int hop, int nfft) {
  if (signal.empty()) throw BadParams("stft: signal must be nonempty");
  check_geometry(window_len, hop, nfft);

  const std::size_t len = signal.size();
  const std::size_t frames = frame_count(len, hop);
  const int bins = nfft / 2 + 1;
  const std::vector<double> window = sqrt_hann(window_len);

  // Front-pad by one hop so the first real sample already sees two
  // overlapping windows; the tail pad just completes the last frame.
  std::vector<double> padded(static_cast<std::size_t>(frames - 1) * hop + window_len, 0.0);
  std::memcpy(padded.data() + hop, signal.data(), len * sizeof(double));

  Spectrogram spec;
  spec.window_len = window_len;
  spec.hop = hop;
  spec.nfft = nfft;
  spec.signal_len = len;
  spec.data.resize(bins, static_cast<Eigen::Index>(frames));

  double* in = fftw_alloc_real(nfft);
  fftw_complex* out = fftw_alloc_complex(bins);
  fftw_plan plan = fftw_plan_dft_r2c_1d(nfft, in, out, FFTW_ESTIMATE);

  for (std::size_t t = 0; t < frames; ++t) {
    const double* frame = padded.data() + t * hop;
    for (int n = 0; n < window_len; ++n) in[n] = frame[n] * window[n];
    std::memset(in + window_len, 0, (nfft - window_len) * sizeof(double));
    fftw_execute(plan);
    for (int b = 0; b < bins; ++b)
      spec.data(b, static_cast<Eigen::Index>(t)) = std::complex<double>(out[b][0], out[b][1]);
  }

  fftw_destroy_plan(plan);
  fftw_free(in);
  fftw_free(out);
  return spec;
}

std::vector<double> istft(const Spectrogram& spec) {
  check_geometry(spec.window_len, spec.hop, spec.nfft);
  if (spec.signal_len == 0) throw BadParams("istft: signal_len must be positive");
  const std::size_t frames = frame_count(spec.signal_len, spec.hop);
  const int bins = spec.nfft / 2 + 1;
  if (spec.data.rows() != bins || spec.data.cols() != static_cast<Eigen::Index>(frames))
    throw BadParams("istft: spectrogram shape does not match its geometry");

  const std::vector<double> window = sqrt_hann(spec.window_len);
  std::vector<double> ola(static_cast<std::size_t>(frames - 1) * spec.hop + spec.window_len,
                          0.0);

  fftw_complex* in = fftw_alloc_complex(bins);
  double* out = fftw_alloc_real(spec.nfft);
  fftw_plan plan = fftw_plan_dft_c2r_1d(spec.nfft, in, out, FFTW_ESTIMATE);

  for (std::size_t t = 0; t < frames; ++t) {
    for (int b = 0; b < bins; ++b) {
      const std::complex<double> v = spec.data(b, static_cast<Eigen::Index>(t));
      in[b][0] = v.real();
      in[b][1] = v.imag();
    }
    fftw_execute(plan);
    // c2r is unnormalized; only the window support matters after synthesis
    // windowing.
    double* dst = ola.data() + t * spec.hop;
    for (int n = 0; n < spec.window_len; ++n)
      dst[n] += out[n] / spec.nfft * window[n];
  }

  fftw_destroy_plan(plan);
  fftw_free(in);
  fftw_free(out);

  return std::vector<double>(ola.begin() + spec.hop,
                             ola.begin() + spec.hop + static_cast<std::ptrdiff_t>(spec.signal_len));
}

std::vector<double> denoise_speech(const std::vector<double>& signal, const SolverConfig& cfg,
                                   DenoiseMode mode) {
  Spectrogram spec = stft(signal);
  if (mode == DenoiseMode::complex_spectrogram) {
    const CSolveResult res = solve(spec.data, cfg);
    spec.data = res.X;
  } else {
    const Mat mags = spec.data.cwiseAbs();
    const SolveResult res = solve(mags, cfg);
    for (Eigen::Index j = 0; j < spec.data.cols(); ++j) {
      for (Eigen::Index i = 0; i < spec.data.rows(); ++i) {
        const std::complex<double> v = spec.data(i, j);
        const double mag = std::abs(v);
        const std::complex<double> phase = mag > 0.0 ? v / mag : std::complex<double>(1.0, 0.0);
        spec.data(i, j) = res.X(i, j) * phase;
      }
    }
  }
  return istft(spec);
}

}  // namespace islr
