#pragma once

#include <vector>

#include "telemelody/note.hpp"
#include "telemelody/sampler.hpp"
#include "telemelody/tokens.hpp"

namespace telemelody {

/// Grid distance required after a note before the next onset.
int cadence_min_gap(Cadence c);  // no: 1, half: 6, authentic: 8

/// Places one onset per triple so that every onset falls in the beat named
/// by its rhythm token and the gap after each note respects its cadence:
/// at least 6 after a half cadence and 8 after an authentic one.
///
/// Onsets sit on beat boundaries, except that after a no-cadence note whose
/// next matching beat boundary is 6 or more away, the note is placed on the
/// earliest eighth-grid slot of the target beat that keeps the gap under 6.
/// Repeated rhythm tokens would otherwise force a whole-bar pause onto a
/// no-cadence note and break its extraction-rule compliance.
std::vector<int> schedule_onsets(const Template& t);

/// Durations from cadence and onset interval (final interval counts as 16):
/// no: min(interval, 3); half: min(interval-1, 8) floored at 4;
/// authentic: min(interval-1, 12) floored at 4.
std::vector<int> assign_durations(const std::vector<int>& onsets,
                                  const std::vector<Cadence>& cadences);

/// Draws one pitch per note from the scale of the template tonality within
/// cfg's range, weighting chord tones over other scale tones and masking
/// pitches further than max_leap from the previous one. A final authentic
/// cadence restricts the last note to the tonic pitch class.
std::vector<int> sample_pitches(const Template& t,
                                const std::vector<int>& onsets,
                                const SamplerConfig& cfg);

/// Full template-to-melody composition; deterministic given cfg.seed.
Melody generate(const Template& t, const SamplerConfig& cfg);

}  // namespace telemelody
