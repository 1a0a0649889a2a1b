#include "telemelody/lyrics.hpp"

#include <algorithm>
#include <cctype>

#include "telemelody/errors.hpp"

namespace telemelody {

namespace {

bool is_vowel_at(const std::string& w, std::size_t i) {
  const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(w[i])));
  if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') return true;
  return c == 'y' && i > 0;  // word-initial y acts as a consonant
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

std::vector<std::string> syllabify_word(const std::string& word) {
  // Explicit hyphen markers always win.
  if (word.find('-') != std::string::npos) {
    std::vector<std::string> parts;
    for (std::string& p : split_on(word, '-'))
      if (!p.empty()) parts.push_back(std::move(p));
    if (!parts.empty()) return parts;
  }

  const std::size_t n = word.size();
  std::vector<bool> vowel(n);
  for (std::size_t i = 0; i < n; ++i) vowel[i] = is_vowel_at(word, i);

  std::vector<std::pair<std::size_t, std::size_t>> groups;  // [start, end]
  for (std::size_t i = 0; i < n;) {
    if (vowel[i]) {
      std::size_t j = i;
      while (j + 1 < n && vowel[j + 1]) ++j;
      groups.emplace_back(i, j);
      i = j + 1;
    } else {
      ++i;
    }
  }

  // Silent final e: a lone trailing 'e' after a consonant does not carry a
  // syllable, except in consonant+"le" endings ("ta-ble").
  if (groups.size() >= 2) {
    auto [s, e] = groups.back();
    const char last = static_cast<char>(
        std::tolower(static_cast<unsigned char>(word[n - 1])));
    if (s == e && s == n - 1 && last == 'e' && !vowel[s - 1]) {
      const bool consonant_le =
          n >= 3 &&
          std::tolower(static_cast<unsigned char>(word[n - 2])) == 'l' &&
          !vowel[n - 3];
      if (!consonant_le) groups.pop_back();
    }
  }

  if (groups.size() <= 1) return {word};

  std::vector<std::string> parts;
  std::size_t prev = 0;
  for (std::size_t g = 0; g + 1 < groups.size(); ++g) {
    const std::size_t gap_start = groups[g].second + 1;
    const std::size_t gap_len = groups[g + 1].first - gap_start;
    const std::size_t cut = gap_start + gap_len / 2;
    parts.push_back(word.substr(prev, cut - prev));
    prev = cut;
  }
  parts.push_back(word.substr(prev));
  return parts;
}

namespace {

// Decodes one UTF-8 code point starting at i; advances i.
char32_t next_codepoint(const std::string& s, std::size_t& i) {
  const unsigned char b0 = s[i];
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int extra = 0;
  char32_t cp = 0;
  if ((b0 & 0xe0) == 0xc0) {
    cp = b0 & 0x1f;
    extra = 1;
  } else if ((b0 & 0xf0) == 0xe0) {
    cp = b0 & 0x0f;
    extra = 2;
  } else if ((b0 & 0xf8) == 0xf0) {
    cp = b0 & 0x07;
    extra = 3;
  } else {
    ++i;
    return 0xfffd;
  }
  std::size_t j = i + 1;
  for (; extra > 0 && j < s.size() && (s[j] & 0xc0) == 0x80; --extra, ++j)
    cp = (cp << 6) | (s[j] & 0x3f);
  i = j;
  return extra == 0 ? cp : 0xfffd;
}

bool is_cjk(char32_t cp) {
  return (cp >= 0x4e00 && cp <= 0x9fff) || (cp >= 0x3400 && cp <= 0x4dbf);
}

// Sentence punctuation, ASCII and fullwidth. Returns None for other chars.
Punct punct_class(char32_t cp) {
  switch (cp) {
    case '.':
    case '!':
    case '?':
    case 0x3002:  // 。
    case 0xff01:  // ！
    case 0xff1f:  // ？
      return Punct::Period;
    case ',':
    case ';':
    case 0xff0c:  // ，
    case 0x3001:  // 、
    case 0xff1b:  // ；
      return Punct::Comma;
    default:
      return Punct::None;
  }
}

std::string encode_utf8(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else {
    out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  }
  return out;
}

void attach_punct(std::vector<LyricUnit>& units, Punct p) {
  if (units.empty() || p == Punct::None) return;
  // A period outranks an earlier comma on the same unit.
  if (units.back().punct_after == Punct::None ||
      (units.back().punct_after == Punct::Comma && p == Punct::Period))
    units.back().punct_after = p;
}

bool has_ascii_letter(const std::string& s) {
  return std::any_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalpha(c) != 0;
  });
}

std::string strip_outer_punct(const std::string& s) {
  std::size_t b = 0, e = s.size();
  auto strippable = [](unsigned char c) {
    return !std::isalnum(c) && c != '-' && c != '\'';
  };
  while (b < e && static_cast<unsigned char>(s[b]) < 0x80 && strippable(s[b]))
    ++b;
  while (e > b && static_cast<unsigned char>(s[e - 1]) < 0x80 &&
         strippable(s[e - 1]))
    --e;
  return s.substr(b, e - b);
}

void parse_en(const std::string& text, std::vector<LyricUnit>& units) {
  bool sentence_start = true;
  std::string word;
  auto flush_word = [&](Punct trailing) {
    const std::string clean = strip_outer_punct(word);
    word.clear();
    if (clean.empty() || !has_ascii_letter(clean)) {
      attach_punct(units, trailing);
      if (trailing != Punct::None && !units.empty()) sentence_start = true;
      return;
    }
    bool first = true;
    for (const std::string& syl : syllabify_word(clean)) {
      LyricUnit u;
      u.text = syl;
      u.word_start = first;
      u.sentence_start = first && sentence_start;
      units.push_back(std::move(u));
      first = false;
    }
    sentence_start = false;
    attach_punct(units, trailing);
    if (trailing != Punct::None) sentence_start = true;
  };

  std::size_t i = 0;
  while (i < text.size()) {
    const std::size_t at = i;
    const char32_t cp = next_codepoint(text, i);
    if (cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r') {
      flush_word(Punct::None);
      continue;
    }
    const Punct p = punct_class(cp);
    if (p != Punct::None) {
      flush_word(p);
      continue;
    }
    word.append(text, at, i - at);
  }
  flush_word(Punct::None);
}

void parse_zh(const std::string& text, std::vector<LyricUnit>& units) {
  bool sentence_start = true;
  std::size_t i = 0;
  while (i < text.size()) {
    const char32_t cp = next_codepoint(text, i);
    const Punct p = punct_class(cp);
    if (p != Punct::None) {
      attach_punct(units, p);
      if (!units.empty()) sentence_start = true;
      continue;
    }
    if (!is_cjk(cp)) continue;  // whitespace and other scripts are skipped
    LyricUnit u;
    u.text = encode_utf8(cp);
    u.word_start = true;
    u.sentence_start = sentence_start;
    units.push_back(std::move(u));
    sentence_start = false;
  }
}

}  // namespace

LyricSequence parse_lyrics(const std::string& text, Lang lang,
                           const std::string& id) {
  const bool blank = std::all_of(text.begin(), text.end(), [](unsigned char c) {
    return std::isspace(c) != 0;
  });
  if (text.empty() || blank) throw EmptyLyrics("no lyric text");

  LyricSequence ls;
  ls.lang = lang;
  ls.id = id;
  if (lang == Lang::En)
    parse_en(text, ls.units);
  else
    parse_zh(text, ls.units);

  if (ls.units.empty())
    throw UnsupportedScript("no syllabifiable content for the chosen language");
  if (ls.units.back().punct_after == Punct::None)
    ls.units.back().punct_after = Punct::Period;
  return ls;
}

std::vector<int> rhythm_onsets(const LyricSequence& ls) {
  std::vector<int> onsets;
  onsets.reserve(ls.units.size());
  int onset = 0;
  for (std::size_t i = 0; i < ls.units.size(); ++i) {
    if (i > 0) {
      const LyricUnit& u = ls.units[i];
      int gap;
      if (ls.lang == Lang::En)
        gap = u.sentence_start ? 8 : (u.word_start ? 4 : 2);
      else
        gap = u.sentence_start ? 8 : 4;
      onset += gap;
    }
    onsets.push_back(onset);
  }
  return onsets;
}

std::vector<int> rhythm_from_rules(const LyricSequence& ls) {
  std::vector<int> rhythm;
  for (int onset : rhythm_onsets(ls))
    rhythm.push_back((onset % kStepsPerBar) / kStepsPerBeat);
  return rhythm;
}

std::vector<Cadence> cadence_from_punct(const LyricSequence& ls) {
  std::vector<Cadence> out;
  out.reserve(ls.units.size());
  for (const LyricUnit& u : ls.units) {
    switch (u.punct_after) {
      case Punct::Comma:
        out.push_back(Cadence::Half);
        break;
      case Punct::Period:
        out.push_back(Cadence::Authentic);
        break;
      default:
        out.push_back(Cadence::None);
    }
  }
  return out;
}

std::vector<Chord> assign_chords(const std::vector<int>& onsets,
                                 const ProgressionSpec& spec) {
  if (spec.chords.empty()) throw EmptyProgression("no chords in progression");
  const int bars_per = std::max(1, spec.bars_per_chord);
  std::vector<Chord> out;
  out.reserve(onsets.size());
  for (int onset : onsets) {
    const int bar = onset / kStepsPerBar;
    out.push_back(
        spec.chords[(bar / bars_per) % spec.chords.size()]);
  }
  return out;
}

Template lyrics_to_template(const LyricSequence& ls,
                            const ProgressionSpec& spec) {
  if (ls.units.empty()) throw EmptyLyrics("no units");
  const std::vector<int> onsets = rhythm_onsets(ls);
  const std::vector<int> rhythm = rhythm_from_rules(ls);
  const std::vector<Cadence> cadence = cadence_from_punct(ls);
  const std::vector<Chord> chords = assign_chords(onsets, spec);

  Template t;
  t.tonality = spec.tonality;
  t.triples.reserve(ls.units.size());
  for (std::size_t i = 0; i < ls.units.size(); ++i)
    t.triples.push_back({chords[i], rhythm[i], cadence[i]});
  return t;
}

}  // namespace telemelody
