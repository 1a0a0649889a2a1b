#pragma once

#include "telemelody/melody_ops.hpp"
#include "telemelody/midi.hpp"
#include "telemelody/note.hpp"
#include "telemelody/tonality.hpp"

namespace telemelody {

/// Full preprocessing chain: track selection, polyphony removal,
/// quantization, tonality normalization and empty-bar filtering.
///
/// With strict_track_selection off, single-track songs skip the 50-note
/// eligibility check so that files written by the generator can be read
/// back for evaluation. Throws NotFourFour on non-4/4 songs and the usual
/// per-stage errors.
Melody preprocess(const MidiSong& song, const KeyProfileConfig& profiles = {},
                  bool strict_track_selection = true);

/// preprocess() on a parsed file.
Melody preprocess_midi_bytes(const std::vector<std::uint8_t>& bytes,
                             const KeyProfileConfig& profiles = {},
                             bool strict_track_selection = true);

}  // namespace telemelody
