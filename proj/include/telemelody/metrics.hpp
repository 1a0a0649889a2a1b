#pragma once

#include <string>
#include <vector>

#include "telemelody/note.hpp"
#include "telemelody/template_extract.hpp"
#include "telemelody/tokens.hpp"

namespace telemelody {

/// Overlapped area of the count-normalized pitch / duration histograms,
/// as percentages. Throws EmptyMelody.
std::pair<double, double> pd_dd(const Melody& hyp, const Melody& ref);

/// Per-sixteenth pitch curve over [first onset, last offset): each note's
/// pitch held through its duration, rests holding the previous pitch.
std::vector<double> pitch_curve(const Melody& m);

/// DTW distance between the mean-subtracted pitch curves with |a-b| cell
/// cost, divided by the warping-path length. Among minimum-cost paths the
/// shortest is used, so the value is well-defined. Throws EmptyMelody.
double melody_distance(const Melody& hyp, const Melody& ref);

/// DTW alignment as (total cost, path length) for oracle comparisons.
std::pair<double, int> dtw_cost_and_length(const std::vector<double>& a,
                                           const std::vector<double>& b);

/// Consistency rates between a melody and a template.
struct ControlResult {
  bool tonality_ok = false;
  int notes = 0;
  int chord_ok = 0;
  int rhythm_ok = 0;
  int cadence_ok = 0;

  double ca() const { return notes ? 100.0 * chord_ok / notes : 0; }
  double ra() const { return notes ? 100.0 * rhythm_ok / notes : 0; }
  double aa() const { return notes ? 100.0 * cadence_ok / notes : 0; }
};

/// Tonality: the melody's inferred key must be C major / A minor matching
/// the template tonality. Rhythm: pos div 4 equals the rhythm token.
/// Chord: the pitch class lies in the note's chord. Cadence: a no-cadence
/// label must coincide exactly with (dur < short_dur and interval <
/// small_interval); the final interval counts as infinite.
/// Throws LengthMismatch.
ControlResult controllability(const Melody& m, const Template& t,
                              const CadenceConfig& cfg = {},
                              const KeyProfileConfig& profiles = {});

struct SongSimilarity {
  std::string id;
  double pd = 0, dd = 0, md = 0;
};

struct SimilarityReport {
  double pd = 0, dd = 0, md = 0;  // unweighted means over songs
  std::vector<SongSimilarity> per_song;
  std::vector<std::string> unpaired_hyp;
  std::vector<std::string> unpaired_ref;
};

struct SongControl {
  std::string id;
  double ta = 0, ca = 0, ra = 0, aa = 0;
};

struct ControlReport {
  double ta = 0;  // percent of songs with consistent tonality
  double ca = 0, ra = 0, aa = 0;  // percent over all notes, pooled
  std::vector<SongControl> per_song;
  std::vector<std::string> unpaired_hyp;
  std::vector<std::string> unpaired_ref;
};

/// Pairs songs by id (sorted); ids present on one side only are recorded,
/// not silently dropped. Throws NoPairs when nothing matches.
SimilarityReport evaluate_similarity(
    const std::vector<std::pair<std::string, Melody>>& hyp,
    const std::vector<std::pair<std::string, Melody>>& ref);

ControlReport evaluate_control(
    const std::vector<std::pair<std::string, Melody>>& melodies,
    const std::vector<std::pair<std::string, Template>>& templates,
    const CadenceConfig& cfg = {}, const KeyProfileConfig& profiles = {});

}  // namespace telemelody
