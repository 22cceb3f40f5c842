// src/features.cpp

// Copyright 2026  The mstrenet authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mstre/features.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstring>
#include <fstream>
#include <numbers>

#include "mstre/errors.h"

namespace mstre {

namespace {

Real hz_to_mel(Real hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
Real mel_to_hz(Real mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

size_t next_pow2(size_t n) {
  size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Iterative radix-2 FFT, in place. Small inputs only (one analysis window).
void fft_radix2(std::vector<std::complex<Real>>& a) {
  const size_t n = a.size();
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const Real ang = -2.0 * std::numbers::pi_v<Real> / static_cast<Real>(len);
    const std::complex<Real> wlen(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      std::complex<Real> w(1.0, 0.0);
      for (size_t k = 0; k < len / 2; ++k) {
        const std::complex<Real> u = a[i + k];
        const std::complex<Real> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

// Triangular mel filters, filter b x fft bin weights.
Matrix mel_filterbank(int bands, int sample_rate_hz, size_t nfft) {
  const int nbins = static_cast<int>(nfft / 2) + 1;
  const Real mel_max = hz_to_mel(sample_rate_hz / 2.0);
  std::vector<Real> edges(bands + 2);
  for (int i = 0; i < bands + 2; ++i)
    edges[i] = mel_to_hz(mel_max * i / (bands + 1));
  Matrix fb(bands, nbins);
  for (int b = 0; b < bands; ++b) {
    const Real lo = edges[b], mid = edges[b + 1], hi = edges[b + 2];
    for (int k = 0; k < nbins; ++k) {
      const Real f = static_cast<Real>(k) * sample_rate_hz / static_cast<Real>(nfft);
      if (f > lo && f < mid)
        fb(b, k) = (f - lo) / (mid - lo);
      else if (f >= mid && f < hi)
        fb(b, k) = (hi - f) / (hi - mid);
    }
  }
  return fb;
}

}  // namespace

int fbank_frame_count(size_t num_samples, int sample_rate_hz, Real hop_ms,
                      Real window_ms) {
  const size_t window = static_cast<size_t>(
      std::lround(window_ms * sample_rate_hz / 1000.0));
  const size_t hop = static_cast<size_t>(
      std::lround(hop_ms * sample_rate_hz / 1000.0));
  if (num_samples < window || hop == 0) return 0;
  return static_cast<int>((num_samples - window) / hop) + 1;
}

std::vector<Real> mel_center_frequencies(int bands, int sample_rate_hz) {
  const Real mel_max = hz_to_mel(sample_rate_hz / 2.0);
  std::vector<Real> centers(bands);
  for (int b = 0; b < bands; ++b)
    centers[b] = mel_to_hz(mel_max * (b + 1) / (bands + 1));
  return centers;
}

FeatureMatrix extract_fbank(const AudioBuffer& audio, int bands, Real hop_ms,
                            Real window_ms) {
  if (bands < 1) throw ConfigError("extract_fbank: bands must be >= 1");
  if (!(hop_ms > 0.0) || !(window_ms > 0.0) || hop_ms > window_ms)
    throw ConfigError("extract_fbank: need 0 < hop_ms <= window_ms");
  if (audio.sample_rate_hz <= 0) throw DataError("invalid audio");
  for (Real s : audio.samples)
    if (!std::isfinite(s)) throw DataError("invalid audio");

  const int window = static_cast<int>(
      std::lround(window_ms * audio.sample_rate_hz / 1000.0));
  const int hop = static_cast<int>(
      std::lround(hop_ms * audio.sample_rate_hz / 1000.0));
  if (audio.samples.size() < static_cast<size_t>(window) || window <= 0)
    throw DataError("audio too short");
  const int num_frames =
      fbank_frame_count(audio.samples.size(), audio.sample_rate_hz, hop_ms,
                        window_ms);

  const size_t nfft = next_pow2(static_cast<size_t>(window));
  const Matrix fb = mel_filterbank(bands, audio.sample_rate_hz, nfft);
  std::vector<Real> hann(window);
  for (int i = 0; i < window; ++i)
    hann[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi_v<Real> * i /
                                   (window - 1));

  FeatureMatrix out;
  out.band_count = bands;
  out.frame_hop_ms = hop_ms;
  out.frame_window_ms = window_ms;
  out.frames = Matrix(num_frames, bands);

  std::vector<std::complex<Real>> buf(nfft);
  const int nbins = static_cast<int>(nfft / 2) + 1;
  std::vector<Real> power(nbins);
  for (int t = 0; t < num_frames; ++t) {
    const size_t start = static_cast<size_t>(t) * hop;
    for (size_t i = 0; i < nfft; ++i) {
      buf[i] = (i < static_cast<size_t>(window))
                   ? std::complex<Real>(audio.samples[start + i] * hann[i], 0.0)
                   : std::complex<Real>(0.0, 0.0);
    }
    fft_radix2(buf);
    for (int k = 0; k < nbins; ++k) power[k] = std::norm(buf[k]);
    Real* row = out.frames.row_data(t);
    for (int b = 0; b < bands; ++b) {
      Real energy = 0.0;
      const Real* w = fb.row_data(b);
      for (int k = 0; k < nbins; ++k) energy += w[k] * power[k];
      row[b] = std::log(std::max(energy, kLogFloor));
    }
  }
  return out;
}

Vector synth_phone_mean(int phone_id, int bands) {
  // Keyed by phone id only, so the planted signatures are stable across
  // seeds and runs. A strong per-phone band bump keeps small-band setups
  // separable.
  Vector mean(bands);
  std::mt19937 rng(0x9e3779b9u ^ (static_cast<uint32_t>(phone_id) * 2654435761u));
  std::normal_distribution<Real> dist(0.0, 1.0);
  for (int b = 0; b < bands; ++b) mean[b] = dist(rng);
  mean[phone_id % bands] += 3.0;
  return mean;
}

SynthResult synth_features(const std::vector<SynthSegment>& spec, int bands,
                           Real noise_level, uint32_t seed) {
  if (spec.empty()) throw DataError("empty specification");
  if (bands < 1) throw ConfigError("synth_features: bands must be >= 1");
  if (noise_level < 0.0) throw ConfigError("synth_features: negative noise");
  int total = 0;
  for (const SynthSegment& seg : spec) {
    if (seg.frame_count < 1)
      throw DataError("synth_features: frame counts must be >= 1");
    if (seg.phone_id < 0) throw DataError("synth_features: negative phone id");
    total += seg.frame_count;
  }
  SynthResult res;
  res.features.band_count = bands;
  res.features.frames = Matrix(total, bands);
  res.alignment.reserve(total);
  std::mt19937 rng(seed);
  std::normal_distribution<Real> noise(0.0, 1.0);
  int t = 0;
  for (const SynthSegment& seg : spec) {
    const Vector mean = synth_phone_mean(seg.phone_id, bands);
    for (int i = 0; i < seg.frame_count; ++i, ++t) {
      Real* row = res.features.frames.row_data(t);
      for (int b = 0; b < bands; ++b)
        row[b] = mean[b] + (noise_level > 0.0 ? noise_level * noise(rng) : 0.0);
      res.alignment.push_back(seg.phone_id);
    }
  }
  return res;
}

Matrix synth_loglikes(const FeatureMatrix& feats, int num_states) {
  const int T = feats.num_frames();
  const int B = feats.band_count;
  Matrix ll(T, num_states);
  std::vector<Vector> means(num_states);
  for (int s = 0; s < num_states; ++s) means[s] = synth_phone_mean(s, B);
  for (int t = 0; t < T; ++t) {
    const Real* x = feats.frames.row_data(t);
    for (int s = 0; s < num_states; ++s) {
      Real d2 = 0.0;
      for (int b = 0; b < B; ++b) {
        const Real d = x[b] - means[s][b];
        d2 += d * d;
      }
      ll(t, s) = -0.5 * d2;
    }
  }
  return ll;
}

void write_fbk(const std::string& path, const FeatureMatrix& feats) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DataError("cannot write feature file: " + path);
  os.write("FBK1", 4);
  const uint32_t rows = static_cast<uint32_t>(feats.frames.rows());
  const uint32_t cols = static_cast<uint32_t>(feats.frames.cols());
  unsigned char hdr[8] = {
      static_cast<unsigned char>(rows & 0xff),
      static_cast<unsigned char>((rows >> 8) & 0xff),
      static_cast<unsigned char>((rows >> 16) & 0xff),
      static_cast<unsigned char>((rows >> 24) & 0xff),
      static_cast<unsigned char>(cols & 0xff),
      static_cast<unsigned char>((cols >> 8) & 0xff),
      static_cast<unsigned char>((cols >> 16) & 0xff),
      static_cast<unsigned char>((cols >> 24) & 0xff)};
  os.write(reinterpret_cast<char*>(hdr), 8);
  for (Real v : feats.frames.data()) {
    const float f = static_cast<float>(v);
    os.write(reinterpret_cast<const char*>(&f), 4);
  }
}

FeatureMatrix read_fbk(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw DataError("cannot open feature file: " + path);
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, "FBK1", 4) != 0)
    throw DataError("bad feature file magic: " + path);
  unsigned char hdr[8];
  is.read(reinterpret_cast<char*>(hdr), 8);
  if (!is) throw DataError("truncated feature file: " + path);
  const uint32_t rows = static_cast<uint32_t>(hdr[0]) | (hdr[1] << 8) |
                        (hdr[2] << 16) | (static_cast<uint32_t>(hdr[3]) << 24);
  const uint32_t cols = static_cast<uint32_t>(hdr[4]) | (hdr[5] << 8) |
                        (hdr[6] << 16) | (static_cast<uint32_t>(hdr[7]) << 24);
  FeatureMatrix out;
  out.band_count = static_cast<int>(cols);
  out.frames = Matrix(static_cast<int>(rows), static_cast<int>(cols));
  for (Real& v : out.frames.data()) {
    float f = 0.0f;
    is.read(reinterpret_cast<char*>(&f), 4);
    if (!is) throw DataError("truncated feature file: " + path);
    v = static_cast<Real>(f);
  }
  return out;
}

void write_fbank_csv(const std::string& path, const FeatureMatrix& feats) {
  std::ofstream os(path);
  if (!os) throw DataError("cannot write csv file: " + path);
  for (int b = 0; b < feats.frames.cols(); ++b)
    os << (b ? "," : "") << "band" << b;
  os << "\n";
  for (int t = 0; t < feats.frames.rows(); ++t) {
    const Real* row = feats.frames.row_data(t);
    for (int b = 0; b < feats.frames.cols(); ++b) {
      if (b) os << ",";
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.9g", row[b]);
      os << buf;
    }
    os << "\n";
  }
}

}  // namespace mstre
