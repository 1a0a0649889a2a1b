#pragma once

#include <string>
#include <vector>

#include "telemelody/chords.hpp"
#include "telemelody/tokens.hpp"

namespace telemelody {

enum class Lang { En, Zh };

enum class Punct { None, Comma, Period };

/// One sung unit: a syllable (EN) or a character (ZH).
struct LyricUnit {
  std::string text;
  bool word_start = false;
  bool sentence_start = false;
  Punct punct_after = Punct::None;

  friend bool operator==(const LyricUnit&, const LyricUnit&) = default;
};

struct LyricSequence {
  Lang lang = Lang::En;
  std::vector<LyricUnit> units;
  std::string id;

  std::size_t size() const { return units.size(); }
};

/// Rule-based syllable split for a single word. Hyphens are explicit
/// markers and always win; otherwise maximal vowel groups with a silent
/// final 'e' suppressed (consonant+"le" endings keep their syllable) and
/// the consonant run between two groups split half to each side.
std::vector<std::string> syllabify_word(const std::string& word);

/// Splits text into units. Sentences break on , . ! ? ; (! and ? count as
/// periods, ; as a comma); EN words split on whitespace, ZH units are single
/// CJK characters. A final unit without punctuation gets a period. Throws
/// EmptyLyrics or UnsupportedScript.
LyricSequence parse_lyrics(const std::string& text, Lang lang,
                           const std::string& id = "");

/// Onsets in sixteenths from the hand-crafted gap rules. EN: 8 before a
/// sentence start, 4 before a word start, 2 otherwise. ZH: 8 before a
/// sentence start, 4 otherwise. First unit starts at 0.
std::vector<int> rhythm_onsets(const LyricSequence& ls);

/// Rhythm tokens for those onsets: (onset mod 16) div 4.
std::vector<int> rhythm_from_rules(const LyricSequence& ls);

/// comma -> half, period -> authentic, none -> no cadence.
std::vector<Cadence> cadence_from_punct(const LyricSequence& ls);

/// User-chosen tonality and chord cycle.
struct ProgressionSpec {
  Mode tonality = Mode::Major;
  std::vector<Chord> chords;
  int bars_per_chord = 1;
};

/// chords[(bar div bars_per_chord) mod len] per onset. Throws EmptyProgression.
std::vector<Chord> assign_chords(const std::vector<int>& onsets,
                                 const ProgressionSpec& spec);

/// Full lyric-to-template composition; one triple per unit.
Template lyrics_to_template(const LyricSequence& ls,
                            const ProgressionSpec& spec);

}  // namespace telemelody
