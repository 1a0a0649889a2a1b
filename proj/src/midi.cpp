#include "telemelody/midi.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>

#include "telemelody/errors.hpp"

namespace telemelody {

namespace {

class ByteReader {
 public:
  ByteReader(const std::uint8_t* data, std::size_t size)
      : data_(data), size_(size) {}

  bool eof() const { return pos_ >= size_; }
  std::size_t remaining() const { return size_ - pos_; }

  std::uint8_t u8() {
    if (pos_ >= size_) throw MalformedMidi("unexpected end of data");
    return data_[pos_++];
  }

  std::uint32_t u16() {
    std::uint32_t hi = u8(), lo = u8();
    return (hi << 8) | lo;
  }

  std::uint32_t u32() {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = (v << 8) | u8();
    return v;
  }

  // Variable-length quantity, at most 4 bytes.
  std::uint32_t vlq() {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
      std::uint8_t b = u8();
      v = (v << 7) | (b & 0x7f);
      if (!(b & 0x80)) return v;
    }
    throw MalformedMidi("variable-length quantity too long");
  }

  void skip(std::size_t n) {
    if (remaining() < n) throw MalformedMidi("chunk overruns file");
    pos_ += n;
  }

  std::string tag() {
    std::string t;
    for (int i = 0; i < 4; ++i) t.push_back(static_cast<char>(u8()));
    return t;
  }

 private:
  const std::uint8_t* data_;
  std::size_t size_;
  std::size_t pos_ = 0;
};

struct TrackParseState {
  RawTrack notes;
  // Open onsets keyed by (channel, pitch); FIFO so overlapping repeats of
  // the same pitch close in onset order.
  std::map<std::pair<int, int>, std::deque<std::int64_t>> open;
};

void note_on(TrackParseState& st, std::int64_t tick, int channel, int pitch) {
  st.open[{channel, pitch}].push_back(tick);
}

void note_off(TrackParseState& st, std::int64_t tick, int channel, int pitch) {
  auto it = st.open.find({channel, pitch});
  if (it == st.open.end() || it->second.empty()) return;  // stray note-off
  std::int64_t onset = it->second.front();
  it->second.pop_front();
  if (tick > onset) st.notes.push_back({onset, tick, pitch, channel});
}

void close_remaining(TrackParseState& st, std::int64_t end_tick) {
  for (auto& [key, onsets] : st.open)
    for (std::int64_t onset : onsets)
      if (end_tick > onset)
        st.notes.push_back({onset, end_tick, key.second, key.first});
  st.open.clear();
}

}  // namespace

MidiSong parse_midi(const std::vector<std::uint8_t>& bytes) {
  ByteReader r(bytes.data(), bytes.size());

  if (r.remaining() < 14 || r.tag() != "MThd")
    throw MalformedMidi("missing MThd header");
  if (r.u32() != 6) throw MalformedMidi("bad MThd length");
  const int format = static_cast<int>(r.u16());
  const int declared_tracks = static_cast<int>(r.u16());
  const std::uint32_t division = r.u16();

  if (format == 2) throw UnsupportedFormat("SMF format 2 is not supported");
  if (format != 0 && format != 1)
    throw MalformedMidi("unknown SMF format " + std::to_string(format));
  if (division & 0x8000)
    throw MissingTiming("SMPTE division carries no ticks-per-quarter");
  if (division == 0) throw MalformedMidi("zero ticks per quarter");

  MidiSong song;
  song.ticks_per_quarter = static_cast<int>(division);

  bool tempo_seen = false;
  bool timesig_seen = false;
  int tracks_read = 0;

  while (!r.eof() && tracks_read < declared_tracks) {
    if (r.remaining() < 8) throw MalformedMidi("truncated chunk header");
    const std::string tag = r.tag();
    const std::uint32_t length = r.u32();
    if (tag != "MTrk") {  // unknown chunks are skipped per the SMF spec
      r.skip(length);
      continue;
    }
    if (r.remaining() < length) throw MalformedMidi("truncated track chunk");

    TrackParseState st;
    std::int64_t tick = 0;
    std::uint8_t running_status = 0;
    std::size_t consumed = 0x100;  // 0x100 = no pending data byte

    ByteReader tr(bytes.data() + (bytes.size() - r.remaining()), length);
    r.skip(length);

    bool end_of_track = false;
    while (!tr.eof() && !end_of_track) {
      tick += tr.vlq();
      std::uint8_t status = tr.u8();
      if (status < 0x80) {  // running status: byte already is data
        if (running_status == 0)
          throw MalformedMidi("data byte without running status");
        consumed = status;
        status = running_status;
      } else {
        consumed = 0x100;  // marker: need to read first data byte
      }

      auto data1 = [&]() -> std::uint8_t {
        if (consumed != 0x100) {
          auto v = static_cast<std::uint8_t>(consumed);
          consumed = 0x100;
          return v;
        }
        return tr.u8();
      };

      const std::uint8_t kind = status & 0xf0;
      const int channel = status & 0x0f;
      switch (kind) {
        case 0x80: {  // note off
          int pitch = data1();
          tr.u8();  // velocity
          note_off(st, tick, channel, pitch);
          running_status = status;
          break;
        }
        case 0x90: {  // note on (velocity 0 means note off)
          int pitch = data1();
          int velocity = tr.u8();
          if (velocity == 0)
            note_off(st, tick, channel, pitch);
          else
            note_on(st, tick, channel, pitch);
          running_status = status;
          break;
        }
        case 0xa0:  // polyphonic aftertouch
        case 0xb0:  // control change
        case 0xe0:  // pitch bend
          data1();
          tr.u8();
          running_status = status;
          break;
        case 0xc0:  // program change
        case 0xd0:  // channel aftertouch
          data1();
          running_status = status;
          break;
        case 0xf0: {
          running_status = 0;
          if (status == 0xff) {  // meta event
            std::uint8_t type = tr.u8();
            std::uint32_t len = tr.vlq();
            if (type == 0x2f) {
              end_of_track = true;
              tr.skip(len);
            } else if (type == 0x51 && len == 3) {
              int tempo = 0;
              for (int i = 0; i < 3; ++i) tempo = (tempo << 8) | tr.u8();
              if (!tempo_seen && tempo > 0) {
                song.tempo_us_per_quarter = tempo;
                tempo_seen = true;
              }
            } else if (type == 0x58 && len >= 2) {
              int num = tr.u8();
              int denom_pow = tr.u8();
              tr.skip(len - 2);
              if (!timesig_seen) {
                song.time_signature = {num, 1 << denom_pow};
                timesig_seen = true;
              }
            } else {
              tr.skip(len);
            }
          } else if (status == 0xf0 || status == 0xf7) {  // sysex
            std::uint32_t len = tr.vlq();
            tr.skip(len);
          } else {
            throw MalformedMidi("unexpected system message");
          }
          break;
        }
        default:
          throw MalformedMidi("bad status byte");
      }
    }

    close_remaining(st, tick);
    std::stable_sort(st.notes.begin(), st.notes.end(),
                     [](const RawNoteEvent& a, const RawNoteEvent& b) {
                       return a.onset_tick < b.onset_tick;
                     });
    song.tracks.push_back(std::move(st.notes));
    ++tracks_read;
  }

  if (song.tracks.empty()) throw MalformedMidi("no tracks");
  return song;
}

namespace {

void append_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back((v >> 24) & 0xff);
  out.push_back((v >> 16) & 0xff);
  out.push_back((v >> 8) & 0xff);
  out.push_back(v & 0xff);
}

void append_u16(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back((v >> 8) & 0xff);
  out.push_back(v & 0xff);
}

void append_vlq(std::vector<std::uint8_t>& out, std::uint32_t v) {
  std::uint8_t buf[4];
  int n = 0;
  buf[n++] = v & 0x7f;
  while (v >>= 7) buf[n++] = 0x80 | (v & 0x7f);
  while (n--) out.push_back(buf[n]);
}

}  // namespace

std::vector<std::uint8_t> write_midi(const Melody& m) {
  constexpr int kTpq = 480;
  constexpr int kTicksPerStep = kTpq / 4;  // 120 ticks per sixteenth
  constexpr std::uint8_t kVelocity = 80;

  std::vector<std::uint8_t> track;
  // tempo 120 BPM
  for (std::uint8_t b : {0x00, 0xff, 0x51, 0x03, 0x07, 0xa1, 0x20})
    track.push_back(b);
  // time signature 4/4
  for (std::uint8_t b : {0x00, 0xff, 0x58, 0x04, 0x04, 0x02, 0x18, 0x08})
    track.push_back(b);

  // Emit note on/off pairs in tick order.
  struct Event {
    std::int64_t tick;
    bool on;
    int pitch;
  };
  std::vector<Event> events;
  for (const Note& n : m.notes) {
    events.push_back({static_cast<std::int64_t>(n.onset()) * kTicksPerStep,
                      true, n.pitch});
    events.push_back({static_cast<std::int64_t>(n.offset()) * kTicksPerStep,
                      false, n.pitch});
  }
  std::stable_sort(events.begin(), events.end(),
                   [](const Event& a, const Event& b) {
                     if (a.tick != b.tick) return a.tick < b.tick;
                     return !a.on && b.on;  // offs before ons at equal ticks
                   });

  std::int64_t tick = 0;
  for (const Event& e : events) {
    append_vlq(track, static_cast<std::uint32_t>(e.tick - tick));
    tick = e.tick;
    track.push_back(e.on ? 0x90 : 0x80);
    track.push_back(static_cast<std::uint8_t>(e.pitch));
    track.push_back(e.on ? kVelocity : 0x40);
  }

  // end of track
  for (std::uint8_t b : {0x00, 0xff, 0x2f, 0x00}) track.push_back(b);

  std::vector<std::uint8_t> out;
  out.insert(out.end(), {'M', 'T', 'h', 'd'});
  append_u32(out, 6);
  append_u16(out, 0);  // format 0
  append_u16(out, 1);  // one track
  append_u16(out, kTpq);
  out.insert(out.end(), {'M', 'T', 'r', 'k'});
  append_u32(out, static_cast<std::uint32_t>(track.size()));
  out.insert(out.end(), track.begin(), track.end());
  return out;
}

std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>());
}

void write_file_bytes(const std::string& path,
                      const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write file: " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

}  // namespace telemelody
