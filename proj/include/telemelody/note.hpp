#pragma once

#include <cstdint>
#include <vector>

namespace telemelody {

// Time is quantized to a 1/16-note grid: 4 steps per beat, 16 per 4/4 bar.
constexpr int kStepsPerBeat = 4;
constexpr int kStepsPerBar = 16;
constexpr int kMaxBar = 255;
constexpr int kMaxDur = 16;

/// One melody event on the sixteenth grid.
struct Note {
  int bar = 0;    // 0..255
  int pos = 0;    // 0..15, sixteenths within the bar
  int pitch = 0;  // 0..127, MIDI pitch number
  int dur = 1;    // 1..16 sixteenths

  int onset() const { return bar * kStepsPerBar + pos; }
  int offset() const { return onset() + dur; }

  friend bool operator==(const Note&, const Note&) = default;
};

/// Transposition applied while normalizing a melody.
struct MelodyMeta {
  int source_key_shift = 0;  // semitones applied to reach C major / A minor
  int octave_shift = 0;      // whole octaves (multiple of 12) applied afterwards

  friend bool operator==(const MelodyMeta&, const MelodyMeta&) = default;
};

/// Ordered monophonic note sequence.
struct Melody {
  std::vector<Note> notes;
  MelodyMeta meta;

  bool empty() const { return notes.empty(); }
  std::size_t size() const { return notes.size(); }

  friend bool operator==(const Melody&, const Melody&) = default;
};

/// Throws Error subclasses when a note violates its field ranges.
void validate_note(const Note& n);

/// Validates field ranges, strict onset ordering and monophony
/// (onset(i) + dur(i) <= onset(i+1)).
void validate_melody(const Melody& m);

/// True when every bar in [0, last bar] contains at least one onset.
bool has_no_empty_bars(const Melody& m);

}  // namespace telemelody
