// mstre/audio.h

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

#ifndef MSTRE_AUDIO_H_
#define MSTRE_AUDIO_H_

#include <string>
#include <vector>

#include "mstre/matrix.h"

namespace mstre {

struct AudioBuffer {
  std::vector<Real> samples;  // amplitudes in [-1, 1]
  int sample_rate_hz = 16000;

  Real duration_seconds() const {
    return sample_rate_hz > 0
               ? static_cast<Real>(samples.size()) / sample_rate_hz
               : 0.0;
  }
};

/// Speed perturbation by linear-interpolation resampling. Output length is
/// round(num_samples / factor); the sample rate is left unchanged, so the
/// content plays back faster (factor > 1) or slower (factor < 1).
/// Throws DataError("invalid factor") for factor <= 0.
AudioBuffer speed_perturb(const AudioBuffer& audio, Real factor);

/// Linear-interpolation sample-rate conversion.
AudioBuffer resample_linear(const AudioBuffer& audio, int target_rate_hz);

/// Reads a RIFF/PCM16 mono WAV file. Any sample rate is accepted; buffers
/// not at 16 kHz are resampled to 16 kHz.
AudioBuffer read_wav(const std::string& path);

/// Writes 16-bit PCM mono WAV (test/demo support).
void write_wav(const std::string& path, const AudioBuffer& audio);

}  // namespace mstre

#endif  // MSTRE_AUDIO_H_
