// mstre/features.h

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

#ifndef MSTRE_FEATURES_H_
#define MSTRE_FEATURES_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mstre/audio.h"
#include "mstre/matrix.h"

namespace mstre {

/// Log mel-filterbank energies, T frames x B bands.
struct FeatureMatrix {
  Matrix frames;               // T x B
  int band_count = 40;
  Real frame_hop_ms = 10.0;
  Real frame_window_ms = 30.0;

  int num_frames() const { return frames.rows(); }
};

/// Power floor applied before the log (silence maps to log(kLogFloor)).
constexpr Real kLogFloor = 1e-10;

/// Log mel-filterbank extraction: Hann window, power spectrum, triangular
/// mel filters from 0 Hz to Nyquist (HTK mel scale), natural log with a
/// 1e-10 floor. T = floor((num_samples - window_samples) / hop_samples) + 1.
FeatureMatrix extract_fbank(const AudioBuffer& audio, int bands = 40,
                            Real hop_ms = 10.0, Real window_ms = 30.0);

/// Closed-form frame count for the windowing above.
int fbank_frame_count(size_t num_samples, int sample_rate_hz, Real hop_ms,
                      Real window_ms);

/// Center frequencies (Hz) of the mel filterbank, for tests and diagnostics.
std::vector<Real> mel_center_frequencies(int bands, int sample_rate_hz);

/// One planted segment of a synthetic utterance.
struct SynthSegment {
  int phone_id = 0;
  int frame_count = 0;
};

struct SynthResult {
  FeatureMatrix features;
  std::vector<int> alignment;  // ground-truth phone id per frame
};

/// Deterministic synthetic feature generator: each phone id has a fixed mean
/// vector (independent of the seed); the seed drives only the additive
/// Gaussian noise. Returns the features and the ground-truth frame labels.
SynthResult synth_features(const std::vector<SynthSegment>& spec, int bands,
                           Real noise_level, uint32_t seed);

/// The mean vector synth_features plants for a phone id. Exposed so tests
/// and demos can build matched Gaussian log-likelihoods.
Vector synth_phone_mean(int phone_id, int bands);

/// Gaussian log-likelihood matrix for synthetic features: row t, column s is
/// -0.5 * ||x_t - mean(s)||^2. Companion to synth_features for exercising
/// alignment and decoding without a trained model.
Matrix synth_loglikes(const FeatureMatrix& feats, int num_states);

// Feature file format: magic "FBK1", u32 rows, u32 cols (little endian),
// then rows*cols 32-bit floats row-major.
void write_fbk(const std::string& path, const FeatureMatrix& feats);
FeatureMatrix read_fbk(const std::string& path);

/// CSV with a header row naming the bands.
void write_fbank_csv(const std::string& path, const FeatureMatrix& feats);

}  // namespace mstre

#endif  // MSTRE_FEATURES_H_
