#pragma once

#include "telemelody/midi.hpp"
#include "telemelody/note.hpp"
#include "telemelody/tonality.hpp"

namespace telemelody {

constexpr int kMinTrackNotes = 50;

/// Picks the track with the highest unweighted mean pitch among tracks with
/// at least kMinTrackNotes non-drum notes; ties go to the lowest track index.
/// Drum-channel events (channel 10, i.e. index 9) are filtered out of the
/// returned events. Throws NoEligibleTrack.
RawTrack select_melody_track(const MidiSong& song);

/// Keeps the highest pitch at each distinct onset and truncates offsets so
/// they never cross the next kept onset.
RawTrack monophonize(const RawTrack& events);

/// Snaps onsets and durations to the sixteenth grid (nearest, ties up) and
/// clamps durations to [1, 16]. Bar indices may exceed 255 here; the limit is
/// enforced after empty-bar filtering in normalize_and_filter.
Melody quantize(const RawTrack& events, int ticks_per_quarter);

/// Transposes so the given key lands on C major / A minor (smallest shift,
/// ties downward), octave-shifts the result so the mean pitch lies in
/// [60, 72), and removes bars without onsets by shifting later notes
/// earlier (durations are truncated where a removed bar shortened the gap).
/// Throws EmptyMelody or BarOverflow (last bar > 255 after filtering).
Melody normalize_and_filter(const Melody& m, const Key& key);

}  // namespace telemelody
