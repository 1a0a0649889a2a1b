#pragma once

#include <string>
#include <vector>

#include "telemelody/chords.hpp"
#include "telemelody/note.hpp"
#include "telemelody/tonality.hpp"

namespace telemelody {

// Melody vocabulary: 256 bars + 16 positions + 128 pitches + 16 durations.
constexpr int kMelodyVocabSize = 256 + 16 + 128 + 16;
// Template vocabulary: 2 tonalities + 84 chords + 4 rhythms + 3 cadences.
constexpr int kTemplateVocabSize = 2 + kChordVocabSize + 4 + 3;

enum class MelodyTokenKind { Bar, Pos, Pitch, Dur };

struct MelodyToken {
  MelodyTokenKind kind = MelodyTokenKind::Bar;
  int value = 0;

  friend bool operator==(const MelodyToken&, const MelodyToken&) = default;
};

enum class Cadence { None, Half, Authentic };

enum class TemplateTokenKind { Tonality, ChordTok, Rhythm, CadenceTok };

struct TemplateToken {
  TemplateTokenKind kind = TemplateTokenKind::Tonality;
  Mode tonality = Mode::Major;  // when kind == Tonality
  Chord chord;                  // when kind == ChordTok
  int rhythm = 0;               // when kind == Rhythm, 0..3
  Cadence cadence = Cadence::None;  // when kind == CadenceTok

  static TemplateToken make_tonality(Mode m);
  static TemplateToken make_chord(const Chord& c);
  static TemplateToken make_rhythm(int r);
  static TemplateToken make_cadence(Cadence c);

  friend bool operator==(const TemplateToken&, const TemplateToken&) = default;
};

/// Per-note musical elements, one triple per note.
struct NoteElements {
  Chord chord;
  int rhythm = 0;
  Cadence cadence = Cadence::None;

  friend bool operator==(const NoteElements&, const NoteElements&) = default;
};

/// Tonality plus one (chord, rhythm, cadence) triple per note.
struct Template {
  Mode tonality = Mode::Major;
  std::vector<NoteElements> triples;

  std::size_t size() const { return triples.size(); }

  friend bool operator==(const Template&, const Template&) = default;
};

// Surface forms ("Bar_0", "Pitch_60", "Chord_C_maj", "Cad_half", ...).
std::string melody_token_string(const MelodyToken& t);
MelodyToken parse_melody_token(const std::string& s);
std::string template_token_string(const TemplateToken& t);
TemplateToken parse_template_token(const std::string& s);

// Integer ids assigned by vocabulary-order enumeration.
int melody_token_id(const MelodyToken& t);
int template_token_id(const TemplateToken& t);

/// [Bar, Pos, Pitch, Dur] per note, 4N tokens. Throws OutOfVocab.
std::vector<MelodyToken> encode_melody(const Melody& m);

/// Inverse of encode_melody. Throws MalformedSequence on wrong arity or a
/// wrong token kind at any slot.
Melody decode_melody(const std::vector<MelodyToken>& tokens);

/// [Ton] then (Chord, Rhy, Cad) per note, 1+3N tokens.
std::vector<TemplateToken> encode_template(const Template& t);
Template decode_template(const std::vector<TemplateToken>& tokens);

// String-level conveniences used by the JSONL formats.
std::vector<std::string> melody_token_strings(const Melody& m);
Melody melody_from_token_strings(const std::vector<std::string>& tokens);
std::vector<std::string> template_token_strings(const Template& t);
Template template_from_token_strings(const std::vector<std::string>& tokens);

const std::string& cadence_name(Cadence c);  // "no", "half", "auth"

}  // namespace telemelody
