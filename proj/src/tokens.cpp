#include "telemelody/tokens.hpp"

#include <charconv>

#include "telemelody/errors.hpp"

namespace telemelody {

TemplateToken TemplateToken::make_tonality(Mode m) {
  TemplateToken t;
  t.kind = TemplateTokenKind::Tonality;
  t.tonality = m;
  return t;
}

TemplateToken TemplateToken::make_chord(const Chord& c) {
  TemplateToken t;
  t.kind = TemplateTokenKind::ChordTok;
  t.chord = c;
  return t;
}

TemplateToken TemplateToken::make_rhythm(int r) {
  TemplateToken t;
  t.kind = TemplateTokenKind::Rhythm;
  t.rhythm = r;
  return t;
}

TemplateToken TemplateToken::make_cadence(Cadence c) {
  TemplateToken t;
  t.kind = TemplateTokenKind::CadenceTok;
  t.cadence = c;
  return t;
}

const std::string& cadence_name(Cadence c) {
  static const std::string names[] = {"no", "half", "auth"};
  return names[static_cast<int>(c)];
}

namespace {

int parse_int_suffix(const std::string& s, std::size_t prefix_len) {
  int value = 0;
  const char* first = s.data() + prefix_len;
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw OutOfVocab("bad token: " + s);
  return value;
}

void check_range(int v, int lo, int hi, const char* what) {
  if (v < lo || v > hi)
    throw OutOfVocab(std::string(what) + " out of vocabulary: " +
                     std::to_string(v));
}

}  // namespace

std::string melody_token_string(const MelodyToken& t) {
  switch (t.kind) {
    case MelodyTokenKind::Bar:
      return "Bar_" + std::to_string(t.value);
    case MelodyTokenKind::Pos:
      return "Pos_" + std::to_string(t.value);
    case MelodyTokenKind::Pitch:
      return "Pitch_" + std::to_string(t.value);
    case MelodyTokenKind::Dur:
      return "Dur_" + std::to_string(t.value);
  }
  throw Error("unreachable");
}

MelodyToken parse_melody_token(const std::string& s) {
  MelodyToken t;
  if (s.rfind("Bar_", 0) == 0) {
    t.kind = MelodyTokenKind::Bar;
    t.value = parse_int_suffix(s, 4);
    check_range(t.value, 0, 255, "bar");
  } else if (s.rfind("Pos_", 0) == 0) {
    t.kind = MelodyTokenKind::Pos;
    t.value = parse_int_suffix(s, 4);
    check_range(t.value, 0, 15, "pos");
  } else if (s.rfind("Pitch_", 0) == 0) {
    t.kind = MelodyTokenKind::Pitch;
    t.value = parse_int_suffix(s, 6);
    check_range(t.value, 0, 127, "pitch");
  } else if (s.rfind("Dur_", 0) == 0) {
    t.kind = MelodyTokenKind::Dur;
    t.value = parse_int_suffix(s, 4);
    check_range(t.value, 1, 16, "dur");
  } else {
    throw OutOfVocab("unknown melody token: " + s);
  }
  return t;
}

std::string template_token_string(const TemplateToken& t) {
  switch (t.kind) {
    case TemplateTokenKind::Tonality:
      return t.tonality == Mode::Major ? "Ton_maj" : "Ton_min";
    case TemplateTokenKind::ChordTok:
      return chord_token(t.chord);
    case TemplateTokenKind::Rhythm:
      return "Rhy_" + std::to_string(t.rhythm);
    case TemplateTokenKind::CadenceTok:
      return "Cad_" + cadence_name(t.cadence);
  }
  throw Error("unreachable");
}

TemplateToken parse_template_token(const std::string& s) {
  if (s == "Ton_maj") return TemplateToken::make_tonality(Mode::Major);
  if (s == "Ton_min") return TemplateToken::make_tonality(Mode::Minor);
  if (s.rfind("Chord_", 0) == 0)
    return TemplateToken::make_chord(parse_chord_token(s));
  if (s.rfind("Rhy_", 0) == 0) {
    const int r = parse_int_suffix(s, 4);
    check_range(r, 0, 3, "rhythm");
    return TemplateToken::make_rhythm(r);
  }
  if (s == "Cad_no") return TemplateToken::make_cadence(Cadence::None);
  if (s == "Cad_half") return TemplateToken::make_cadence(Cadence::Half);
  if (s == "Cad_auth") return TemplateToken::make_cadence(Cadence::Authentic);
  throw OutOfVocab("unknown template token: " + s);
}

int melody_token_id(const MelodyToken& t) {
  switch (t.kind) {
    case MelodyTokenKind::Bar:
      return t.value;
    case MelodyTokenKind::Pos:
      return 256 + t.value;
    case MelodyTokenKind::Pitch:
      return 256 + 16 + t.value;
    case MelodyTokenKind::Dur:
      return 256 + 16 + 128 + (t.value - 1);
  }
  throw Error("unreachable");
}

int template_token_id(const TemplateToken& t) {
  switch (t.kind) {
    case TemplateTokenKind::Tonality:
      return t.tonality == Mode::Major ? 0 : 1;
    case TemplateTokenKind::ChordTok:
      return 2 + t.chord.root * kNumChordQualities +
             static_cast<int>(t.chord.quality);
    case TemplateTokenKind::Rhythm:
      return 2 + kChordVocabSize + t.rhythm;
    case TemplateTokenKind::CadenceTok:
      return 2 + kChordVocabSize + 4 + static_cast<int>(t.cadence);
  }
  throw Error("unreachable");
}

std::vector<MelodyToken> encode_melody(const Melody& m) {
  std::vector<MelodyToken> out;
  out.reserve(m.notes.size() * 4);
  for (const Note& n : m.notes) {
    if (n.bar < 0 || n.bar > 255) throw OutOfVocab("bar out of vocabulary");
    if (n.pos < 0 || n.pos > 15) throw OutOfVocab("pos out of vocabulary");
    if (n.pitch < 0 || n.pitch > 127)
      throw OutOfVocab("pitch out of vocabulary");
    if (n.dur < 1 || n.dur > 16) throw OutOfVocab("dur out of vocabulary");
    out.push_back({MelodyTokenKind::Bar, n.bar});
    out.push_back({MelodyTokenKind::Pos, n.pos});
    out.push_back({MelodyTokenKind::Pitch, n.pitch});
    out.push_back({MelodyTokenKind::Dur, n.dur});
  }
  return out;
}

Melody decode_melody(const std::vector<MelodyToken>& tokens) {
  if (tokens.size() % 4 != 0)
    throw MalformedSequence("melody token count not divisible by 4");
  Melody m;
  m.notes.reserve(tokens.size() / 4);
  static const MelodyTokenKind slots[4] = {
      MelodyTokenKind::Bar, MelodyTokenKind::Pos, MelodyTokenKind::Pitch,
      MelodyTokenKind::Dur};
  for (std::size_t i = 0; i < tokens.size(); i += 4) {
    Note n;
    for (int j = 0; j < 4; ++j)
      if (tokens[i + j].kind != slots[j])
        throw MalformedSequence("wrong token kind at slot " +
                                std::to_string(i + j));
    n.bar = tokens[i].value;
    n.pos = tokens[i + 1].value;
    n.pitch = tokens[i + 2].value;
    n.dur = tokens[i + 3].value;
    m.notes.push_back(n);
  }
  return m;
}

std::vector<TemplateToken> encode_template(const Template& t) {
  std::vector<TemplateToken> out;
  out.reserve(1 + t.triples.size() * 3);
  out.push_back(TemplateToken::make_tonality(t.tonality));
  for (const NoteElements& e : t.triples) {
    if (e.rhythm < 0 || e.rhythm > 3)
      throw OutOfVocab("rhythm out of vocabulary");
    out.push_back(TemplateToken::make_chord(e.chord));
    out.push_back(TemplateToken::make_rhythm(e.rhythm));
    out.push_back(TemplateToken::make_cadence(e.cadence));
  }
  return out;
}

Template decode_template(const std::vector<TemplateToken>& tokens) {
  if (tokens.empty() || tokens.size() % 3 != 1)
    throw MalformedSequence("template token count must be 1 + 3N");
  if (tokens[0].kind != TemplateTokenKind::Tonality)
    throw MalformedSequence("template must start with a tonality token");
  Template t;
  t.tonality = tokens[0].tonality;
  for (std::size_t i = 1; i < tokens.size(); i += 3) {
    if (tokens[i].kind != TemplateTokenKind::ChordTok ||
        tokens[i + 1].kind != TemplateTokenKind::Rhythm ||
        tokens[i + 2].kind != TemplateTokenKind::CadenceTok)
      throw MalformedSequence("wrong token kind in triple at " +
                              std::to_string(i));
    NoteElements e;
    e.chord = tokens[i].chord;
    e.rhythm = tokens[i + 1].rhythm;
    e.cadence = tokens[i + 2].cadence;
    t.triples.push_back(e);
  }
  return t;
}

std::vector<std::string> melody_token_strings(const Melody& m) {
  std::vector<std::string> out;
  for (const MelodyToken& t : encode_melody(m))
    out.push_back(melody_token_string(t));
  return out;
}

Melody melody_from_token_strings(const std::vector<std::string>& tokens) {
  std::vector<MelodyToken> parsed;
  parsed.reserve(tokens.size());
  for (const std::string& s : tokens) parsed.push_back(parse_melody_token(s));
  return decode_melody(parsed);
}

std::vector<std::string> template_token_strings(const Template& t) {
  std::vector<std::string> out;
  for (const TemplateToken& tok : encode_template(t))
    out.push_back(template_token_string(tok));
  return out;
}

Template template_from_token_strings(const std::vector<std::string>& tokens) {
  std::vector<TemplateToken> parsed;
  parsed.reserve(tokens.size());
  for (const std::string& s : tokens)
    parsed.push_back(parse_template_token(s));
  return decode_template(parsed);
}

}  // namespace telemelody
