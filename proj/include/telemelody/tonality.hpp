#pragma once

#include <array>

#include "telemelody/note.hpp"

namespace telemelody {

enum class Mode { Major, Minor };

/// A root pitch class plus mode, e.g. {0, Major} = C major, {9, Minor} = A minor.
struct Key {
  int root = 0;
  Mode mode = Mode::Major;

  friend bool operator==(const Key&, const Key&) = default;
};

constexpr Key kCMajor{0, Mode::Major};
constexpr Key kAMinor{9, Mode::Minor};

/// Pitch-class weight profiles used for key finding. The defaults are the
/// Krumhansl-Kessler probe-tone ratings.
struct KeyProfileConfig {
  std::array<double, 12> major_profile = {6.35, 2.23, 3.48, 2.33, 4.38, 4.09,
                                          2.52, 5.19, 2.39, 3.66, 2.29, 2.88};
  std::array<double, 12> minor_profile = {6.33, 2.68, 3.52, 5.38, 2.60, 3.53,
                                          2.54, 4.75, 3.98, 2.69, 3.34, 3.17};
};

/// Duration-weighted pitch-class histogram of a melody.
std::array<double, 12> pitch_class_histogram(const Melody& m);

/// Scores all 24 (root, mode) candidates by Pearson correlation between the
/// rotated profile and the histogram; returns the best. Exact ties prefer
/// major over minor, then the lower root pitch class. Zero-variance
/// histograms score 0 everywhere and fall through to C major.
/// Throws EmptyMelody.
Key infer_tonality(const Melody& m, const KeyProfileConfig& cfg = {});

/// Correlation score of one candidate (exposed for oracle tests).
double key_candidate_score(const std::array<double, 12>& histogram,
                           const Key& candidate, const KeyProfileConfig& cfg);

}  // namespace telemelody
