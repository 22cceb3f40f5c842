// src/audio.cpp

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

#include "mstre/audio.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "mstre/errors.h"

namespace mstre {

namespace {

// Resamples so that output sample i reads input position i * step.
std::vector<Real> resample_by_step(const std::vector<Real>& in, Real step,
                                   size_t out_len) {
  std::vector<Real> out(out_len);
  const size_t n = in.size();
  for (size_t i = 0; i < out_len; ++i) {
    const Real pos = static_cast<Real>(i) * step;
    const size_t lo = std::min(static_cast<size_t>(pos), n - 1);
    const size_t hi = std::min(lo + 1, n - 1);
    const Real frac = pos - static_cast<Real>(lo);
    out[i] = in[lo] + frac * (in[hi] - in[lo]);
  }
  return out;
}

uint32_t read_u32(std::istream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
         (static_cast<uint32_t>(b[2]) << 16) |
         (static_cast<uint32_t>(b[3]) << 24);
}

uint16_t read_u16(std::istream& is) {
  unsigned char b[2];
  is.read(reinterpret_cast<char*>(b), 2);
  return static_cast<uint16_t>(b[0] | (b[1] << 8));
}

void write_u32(std::ostream& os, uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff),
                        static_cast<unsigned char>((v >> 16) & 0xff),
                        static_cast<unsigned char>((v >> 24) & 0xff)};
  os.write(reinterpret_cast<char*>(b), 4);
}

void write_u16(std::ostream& os, uint16_t v) {
  unsigned char b[2] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff)};
  os.write(reinterpret_cast<char*>(b), 2);
}

}  // namespace

AudioBuffer speed_perturb(const AudioBuffer& audio, Real factor) {
  if (!(factor > 0.0)) throw DataError("invalid factor");
  if (audio.samples.empty()) throw DataError("audio too short");
  if (factor == 1.0) return audio;
  const size_t out_len = static_cast<size_t>(
      std::llround(static_cast<Real>(audio.samples.size()) / factor));
  AudioBuffer out;
  out.sample_rate_hz = audio.sample_rate_hz;
  out.samples = resample_by_step(audio.samples, factor, std::max<size_t>(1, out_len));
  return out;
}

AudioBuffer resample_linear(const AudioBuffer& audio, int target_rate_hz) {
  if (target_rate_hz <= 0) throw DataError("invalid sample rate");
  if (audio.samples.empty()) throw DataError("audio too short");
  if (audio.sample_rate_hz == target_rate_hz) return audio;
  const Real step =
      static_cast<Real>(audio.sample_rate_hz) / static_cast<Real>(target_rate_hz);
  const size_t out_len = static_cast<size_t>(std::llround(
      static_cast<Real>(audio.samples.size()) / step));
  AudioBuffer out;
  out.sample_rate_hz = target_rate_hz;
  out.samples = resample_by_step(audio.samples, step, std::max<size_t>(1, out_len));
  return out;
}

AudioBuffer read_wav(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw DataError("cannot open wav file: " + path);
  char magic[4];
  is.read(magic, 4);
  if (std::memcmp(magic, "RIFF", 4) != 0)
    throw DataError("not a RIFF file: " + path);
  read_u32(is);  // riff size
  is.read(magic, 4);
  if (std::memcmp(magic, "WAVE", 4) != 0)
    throw DataError("not a WAVE file: " + path);

  uint16_t channels = 0, bits = 0, format = 0;
  uint32_t rate = 0;
  std::vector<Real> samples;
  bool got_fmt = false, got_data = false;
  while (is && !(got_fmt && got_data)) {
    is.read(magic, 4);
    if (!is) break;
    const uint32_t chunk_size = read_u32(is);
    if (std::memcmp(magic, "fmt ", 4) == 0) {
      format = read_u16(is);
      channels = read_u16(is);
      rate = read_u32(is);
      read_u32(is);  // byte rate
      read_u16(is);  // block align
      bits = read_u16(is);
      if (chunk_size > 16) is.seekg(chunk_size - 16, std::ios::cur);
      got_fmt = true;
    } else if (std::memcmp(magic, "data", 4) == 0) {
      if (!got_fmt) throw DataError("wav data before fmt chunk: " + path);
      if (format != 1 || bits != 16)
        throw DataError("unsupported wav encoding (want PCM16): " + path);
      if (channels != 1) throw DataError("unsupported wav (want mono): " + path);
      const size_t n = chunk_size / 2;
      samples.resize(n);
      for (size_t i = 0; i < n; ++i) {
        const uint16_t raw = read_u16(is);
        samples[i] = static_cast<int16_t>(raw) / 32768.0;
      }
      got_data = true;
    } else {
      is.seekg(chunk_size + (chunk_size & 1), std::ios::cur);
    }
  }
  if (!got_fmt || !got_data) throw DataError("truncated wav file: " + path);
  AudioBuffer buf;
  buf.samples = std::move(samples);
  buf.sample_rate_hz = static_cast<int>(rate);
  if (buf.sample_rate_hz != 16000) buf = resample_linear(buf, 16000);
  return buf;
}

void write_wav(const std::string& path, const AudioBuffer& audio) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DataError("cannot write wav file: " + path);
  const uint32_t n = static_cast<uint32_t>(audio.samples.size());
  os.write("RIFF", 4);
  write_u32(os, 36 + n * 2);
  os.write("WAVE", 4);
  os.write("fmt ", 4);
  write_u32(os, 16);
  write_u16(os, 1);  // PCM
  write_u16(os, 1);  // mono
  write_u32(os, static_cast<uint32_t>(audio.sample_rate_hz));
  write_u32(os, static_cast<uint32_t>(audio.sample_rate_hz) * 2);
  write_u16(os, 2);
  write_u16(os, 16);
  os.write("data", 4);
  write_u32(os, n * 2);
  for (Real s : audio.samples) {
    const Real clamped = std::clamp<Real>(s, -1.0, 1.0);
    write_u16(os, static_cast<uint16_t>(
                      static_cast<int16_t>(std::lround(clamped * 32767.0))));
  }
}

}  // namespace mstre
