#pragma once

#include <array>
#include <string>
#include <vector>

namespace telemelody {

constexpr int kNumPitchClasses = 12;

/// Pitch-class names used in chord tokens (sharps only).
extern const std::array<std::string, 12> kPitchClassNames;

enum class ChordQuality { Maj, Min, Dim, Aug, Maj7, Min7, HalfDim };

constexpr int kNumChordQualities = 7;
constexpr int kChordVocabSize = kNumPitchClasses * kNumChordQualities;  // 84

/// Suffix used in the token surface form, e.g. "maj" in "Chord_C_maj".
const std::string& quality_name(ChordQuality q);

/// Root pitch class plus quality.
struct Chord {
  int root = 0;  // pitch class 0..11
  ChordQuality quality = ChordQuality::Maj;

  friend bool operator==(const Chord&, const Chord&) = default;
};

/// Intervals (semitones above the root) sounding in a chord.
const std::vector<int>& quality_intervals(ChordQuality q);

/// Pitch classes belonging to the chord.
std::vector<int> chord_tones(const Chord& c);

bool is_chord_tone(const Chord& c, int pitch_class);

/// Token surface form, e.g. Chord{9, Min} -> "Chord_A_min".
std::string chord_token(const Chord& c);

/// Inverse of chord_token. Throws OutOfVocab on unknown strings.
Chord parse_chord_token(const std::string& token);

/// Short names as they appear in progression specs: "Am", "F", "G7"-style
/// suffixes ("", "m", "dim", "aug", "maj7", "m7", "m7b5"); flats accepted.
/// Full "Chord_*" tokens are accepted too.
Chord parse_chord_name(const std::string& name);

/// All 84 chords in vocabulary order: root-major (C..B outer loop),
/// quality-minor (maj, min, dim, aug, maj7, min7, half_dim inner loop).
const std::vector<Chord>& chord_vocabulary();

/// The 24 major and minor triads: majors C..B, then minors C..B.
/// Default candidate set for chord inference.
const std::vector<Chord>& triad_candidates();

}  // namespace telemelody
