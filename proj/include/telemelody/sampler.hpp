#pragma once

#include <cstdint>
#include <vector>

#include "telemelody/rng.hpp"

namespace telemelody {

/// Stochastic sampling knobs plus the melodic constraints of the
/// rule-based generator.
struct SamplerConfig {
  double temperature = 0.5;
  int top_k = 10;
  double chord_tone_weight = 4.0;
  double scale_tone_weight = 1.0;
  int max_leap = 12;          // semitones from the previous pitch
  int pitch_low = 55;         // inclusive MIDI pitch range
  int pitch_high = 79;
  std::uint64_t seed = 0;
};

/// Keeps the top_k largest weights (ties to the lower index), raises each to
/// the power 1/temperature, renormalizes, draws one index from the stream.
/// Throws AllZeroWeights when no weight is positive.
int sample_categorical(const std::vector<double>& weights,
                       const SamplerConfig& cfg, RandomSource& rng);

}  // namespace telemelody
