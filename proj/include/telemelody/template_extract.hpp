#pragma once

#include <vector>

#include "telemelody/chord_infer.hpp"
#include "telemelody/note.hpp"
#include "telemelody/rng.hpp"
#include "telemelody/tokens.hpp"
#include "telemelody/tonality.hpp"

namespace telemelody {

/// Thresholds for the cadence labelling rules, in sixteenths.
struct CadenceConfig {
  double p_auth = 0.3;     // chance of authentic for non-root tonic tones
  int short_dur = 4;       // 1 beat
  int small_interval = 6;  // 1.5 beats
  int large_interval = 8;  // 2 beats
};

/// Per-note beat position within the bar: pos div 4, in 0..3.
std::vector<int> extract_rhythm(const Melody& m);

/// Labels each note as no / half / authentic cadence:
///  1. no cadence    when dur < short_dur and the onset interval to the next
///     note is < small_interval (the final interval counts as infinite);
///  2. authentic     when the pitch class is the tonic root or the note's
///     chord is the tonic chord; also, with probability p_auth, when the
///     pitch class is a non-root tonic-triad tone and the interval is
///     > large_interval (one rng draw per such candidate, in note order);
///  3. half          otherwise.
/// Throws LengthMismatch when chords and notes disagree in length.
std::vector<Cadence> extract_cadence(const Melody& m, const Key& tonality,
                                     const std::vector<Chord>& chords,
                                     const CadenceConfig& cfg,
                                     RandomSource& rng);

/// All extraction knobs in one place.
struct ExtractConfig {
  KeyProfileConfig key_profiles;
  ChordHmmConfig chord_hmm;
  CadenceConfig cadence;
};

/// Runs tonality, chord, rhythm and cadence extraction and assembles the
/// result. The melody is expected to be preprocessed (normalized tonality).
Template extract_template(const Melody& m, const ExtractConfig& cfg,
                          RandomSource& rng);

/// Tonic triad pitch classes of a key: root, third (major or minor), fifth.
std::vector<int> tonic_triad(const Key& key);

/// Tonic chord of a key (major or minor triad on the root).
Chord tonic_chord(const Key& key);

}  // namespace telemelody
