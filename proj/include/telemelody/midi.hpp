#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "telemelody/note.hpp"

namespace telemelody {

/// One paired note-on/note-off, in absolute ticks.
struct RawNoteEvent {
  std::int64_t onset_tick = 0;
  std::int64_t offset_tick = 0;
  int pitch = 0;
  int channel = 0;

  friend bool operator==(const RawNoteEvent&, const RawNoteEvent&) = default;
};

using RawTrack = std::vector<RawNoteEvent>;

/// Parsed Standard MIDI File, reduced to note events plus the first
/// tempo and time-signature meta events.
struct MidiSong {
  std::vector<RawTrack> tracks;
  int ticks_per_quarter = 480;
  int tempo_us_per_quarter = 500000;  // 120 BPM
  std::pair<int, int> time_signature = {4, 4};
};

/// Parses an SMF format 0 or 1 byte stream.
///
/// Note-on/note-off pairs are matched per channel+pitch (oldest open onset
/// first); notes still open at end of track are closed there. Only the first
/// tempo and time-signature events are kept. Throws MalformedMidi,
/// UnsupportedFormat (format 2) or MissingTiming (SMPTE division).
MidiSong parse_midi(const std::vector<std::uint8_t>& bytes);

/// Serializes a melody as a single-track format-0 file at 480 ticks per
/// quarter, 120 BPM, 4/4. The sixteenth grid maps to 120-tick steps, so a
/// parse + quantize round trip reproduces the note list exactly.
std::vector<std::uint8_t> write_midi(const Melody& m);

std::vector<std::uint8_t> read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path,
                      const std::vector<std::uint8_t>& bytes);

}  // namespace telemelody
