#pragma once

#include <vector>

#include "telemelody/chords.hpp"
#include "telemelody/note.hpp"

namespace telemelody {

/// Scoring weights for chord inference over fixed-length segments.
struct ChordHmmConfig {
  std::vector<Chord> candidate_chords = triad_candidates();
  int segment_len = kStepsPerBar;    // sixteenths per chord slot
  double chord_tone_weight = 1.0;    // reward per sixteenth of chord tone
  double non_chord_penalty = 0.5;    // cost per sixteenth of non-chord tone
  double switch_penalty = 1.0;       // cost per chord change
};

/// Emission score of one (segment, chord) pair: sum over notes overlapping
/// the segment of overlap * (+chord_tone_weight | -non_chord_penalty).
double segment_emission(const Melody& m, int segment, const Chord& chord,
                        const ChordHmmConfig& cfg);

/// Number of segment_len windows covering [0, last offset).
int segment_count(const Melody& m, const ChordHmmConfig& cfg);

/// Best chord per segment: maximizes sum of emissions minus switch_penalty
/// per change. Score ties resolve to the path that is lexicographically
/// earliest in candidate-list order. Throws EmptyMelody.
std::vector<Chord> infer_segment_chords(const Melody& m,
                                        const ChordHmmConfig& cfg = {});

/// Expands the per-segment result to one chord per note (a note belongs to
/// the segment containing its onset).
std::vector<Chord> infer_chords(const Melody& m,
                                const ChordHmmConfig& cfg = {});

}  // namespace telemelody
