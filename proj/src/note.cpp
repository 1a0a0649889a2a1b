#include "telemelody/note.hpp"

#include <string>
#include <unordered_set>

#include "telemelody/errors.hpp"

namespace telemelody {

void validate_note(const Note& n) {
  if (n.bar < 0 || n.bar > kMaxBar)
    throw BarOverflow("bar out of range: " + std::to_string(n.bar));
  if (n.pos < 0 || n.pos >= kStepsPerBar)
    throw Error("pos out of range: " + std::to_string(n.pos));
  if (n.pitch < 0 || n.pitch > 127)
    throw Error("pitch out of range: " + std::to_string(n.pitch));
  if (n.dur < 1 || n.dur > kMaxDur)
    throw Error("dur out of range: " + std::to_string(n.dur));
}

void validate_melody(const Melody& m) {
  for (std::size_t i = 0; i < m.notes.size(); ++i) {
    validate_note(m.notes[i]);
    if (i + 1 < m.notes.size()) {
      const int onset = m.notes[i].onset();
      const int next = m.notes[i + 1].onset();
      if (onset >= next) throw Error("onsets must strictly increase");
      if (m.notes[i].offset() > next)
        throw Error("note overlaps the next onset (not monophonic)");
    }
  }
}

bool has_no_empty_bars(const Melody& m) {
  if (m.notes.empty()) return true;
  std::unordered_set<int> occupied;
  int last = 0;
  for (const Note& n : m.notes) {
    occupied.insert(n.bar);
    if (n.bar > last) last = n.bar;
  }
  for (int b = 0; b <= last; ++b)
    if (!occupied.count(b)) return false;
  return true;
}

}  // namespace telemelody
