#include "telemelody/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "telemelody/errors.hpp"
#include "telemelody/tonality.hpp"

namespace telemelody {

std::pair<double, double> pd_dd(const Melody& hyp, const Melody& ref) {
  if (hyp.empty() || ref.empty())
    throw EmptyMelody("similarity needs nonempty melodies");

  // Overlap of the count-normalized histograms, done in integers:
  // sum_v min(ch/nh, cr/nr) = sum_v min(ch*nr, cr*nh) / (nh*nr),
  // so identical histograms give exactly 100.
  const long nh = static_cast<long>(hyp.notes.size());
  const long nr = static_cast<long>(ref.notes.size());
  auto overlap = [&](const std::vector<long>& a, const std::vector<long>& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::min(a[i] * nr, b[i] * nh);
    return 100.0 * static_cast<double>(s) / static_cast<double>(nh * nr);
  };

  std::vector<long> hp(128, 0), rp(128, 0), hd(17, 0), rd(17, 0);
  for (const Note& n : hyp.notes) {
    ++hp[n.pitch];
    ++hd[n.dur];
  }
  for (const Note& n : ref.notes) {
    ++rp[n.pitch];
    ++rd[n.dur];
  }
  return {overlap(hp, rp), overlap(hd, rd)};
}

std::vector<double> pitch_curve(const Melody& m) {
  if (m.empty()) throw EmptyMelody("no notes to build a pitch curve from");
  const int start = m.notes.front().onset();
  int end = 0;
  for (const Note& n : m.notes) end = std::max(end, n.offset());

  // The melody is monophonic and onset-sorted: the value at time t is the
  // pitch of the last note starting at or before t, which also covers rests.
  std::vector<double> curve;
  curve.reserve(static_cast<std::size_t>(end - start));
  std::size_t k = 0;
  for (int t = start; t < end; ++t) {
    while (k + 1 < m.notes.size() && m.notes[k + 1].onset() <= t) ++k;
    curve.push_back(m.notes[k].pitch);
  }
  return curve;
}

std::pair<double, int> dtw_cost_and_length(const std::vector<double>& a,
                                           const std::vector<double>& b) {
  const std::size_t n = a.size(), m = b.size();
  constexpr double inf = std::numeric_limits<double>::infinity();
  // Lexicographic DP on (cost, length): cost first, then fewest cells.
  // Two rolling rows keep memory at O(m).
  std::vector<double> prev_cost(m), cur_cost(m);
  std::vector<int> prev_len(m), cur_len(m);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double cell = std::abs(a[i] - b[j]);
      if (i == 0 && j == 0) {
        cur_cost[j] = cell;
        cur_len[j] = 1;
        continue;
      }
      double best = inf;
      int best_len = 0;
      auto consider = [&](double c, int l) {
        if (c < best || (c == best && l < best_len)) {
          best = c;
          best_len = l;
        }
      };
      if (i > 0 && j > 0) consider(prev_cost[j - 1], prev_len[j - 1]);
      if (i > 0) consider(prev_cost[j], prev_len[j]);
      if (j > 0) consider(cur_cost[j - 1], cur_len[j - 1]);
      cur_cost[j] = best + cell;
      cur_len[j] = best_len + 1;
    }
    std::swap(prev_cost, cur_cost);
    std::swap(prev_len, cur_len);
  }
  return {prev_cost[m - 1], prev_len[m - 1]};
}

double melody_distance(const Melody& hyp, const Melody& ref) {
  std::vector<double> a = pitch_curve(hyp);
  std::vector<double> b = pitch_curve(ref);
  // Curves hold integer pitches, so x*n - sum is exact and the demeaned
  // values come out bit-identical under whole-tone transposition.
  auto demean = [](std::vector<double>& v) {
    double sum = 0;
    for (double x : v) sum += x;
    const double n = static_cast<double>(v.size());
    for (double& x : v) x = (x * n - sum) / n;
  };
  demean(a);
  demean(b);
  const auto [cost, length] = dtw_cost_and_length(a, b);
  return cost / static_cast<double>(length);
}

ControlResult controllability(const Melody& m, const Template& t,
                              const CadenceConfig& cfg,
                              const KeyProfileConfig& profiles) {
  if (m.notes.size() != t.triples.size())
    throw LengthMismatch("note count must equal triple count");

  ControlResult r;
  r.notes = static_cast<int>(m.notes.size());

  if (!m.empty()) {
    const Key inferred = infer_tonality(m, profiles);
    const Key expected = t.tonality == Mode::Major ? kCMajor : kAMinor;
    r.tonality_ok = inferred == expected;
  }

  for (std::size_t i = 0; i < m.notes.size(); ++i) {
    const Note& n = m.notes[i];
    const NoteElements& e = t.triples[i];
    const double interval =
        i + 1 < m.notes.size()
            ? static_cast<double>(m.notes[i + 1].onset() - n.onset())
            : std::numeric_limits<double>::infinity();

    if (n.pos / kStepsPerBeat == e.rhythm) ++r.rhythm_ok;
    if (is_chord_tone(e.chord, n.pitch)) ++r.chord_ok;

    const bool short_and_tight =
        n.dur < cfg.short_dur && interval < cfg.small_interval;
    const bool labelled_no = e.cadence == Cadence::None;
    if (labelled_no == short_and_tight) ++r.cadence_ok;
  }
  return r;
}

namespace {

template <typename T>
std::map<std::string, const T*> index_by_id(
    const std::vector<std::pair<std::string, T>>& items) {
  std::map<std::string, const T*> out;
  for (const auto& [id, value] : items) out.emplace(id, &value);
  return out;
}

}  // namespace

SimilarityReport evaluate_similarity(
    const std::vector<std::pair<std::string, Melody>>& hyp,
    const std::vector<std::pair<std::string, Melody>>& ref) {
  const auto hyp_by_id = index_by_id(hyp);
  const auto ref_by_id = index_by_id(ref);

  SimilarityReport report;
  for (const auto& [id, m] : hyp_by_id)
    if (!ref_by_id.count(id)) report.unpaired_hyp.push_back(id);
  for (const auto& [id, m] : ref_by_id)
    if (!hyp_by_id.count(id)) report.unpaired_ref.push_back(id);

  for (const auto& [id, h] : hyp_by_id) {
    auto it = ref_by_id.find(id);
    if (it == ref_by_id.end()) continue;
    const auto [pd, dd] = pd_dd(*h, *it->second);
    const double md = melody_distance(*h, *it->second);
    report.per_song.push_back({id, pd, dd, md});
  }
  if (report.per_song.empty()) throw NoPairs("no matching ids");

  for (const SongSimilarity& s : report.per_song) {
    report.pd += s.pd;
    report.dd += s.dd;
    report.md += s.md;
  }
  const double n = static_cast<double>(report.per_song.size());
  report.pd /= n;
  report.dd /= n;
  report.md /= n;
  return report;
}

ControlReport evaluate_control(
    const std::vector<std::pair<std::string, Melody>>& melodies,
    const std::vector<std::pair<std::string, Template>>& templates,
    const CadenceConfig& cfg, const KeyProfileConfig& profiles) {
  const auto mel_by_id = index_by_id(melodies);
  const auto tpl_by_id = index_by_id(templates);

  ControlReport report;
  for (const auto& [id, m] : mel_by_id)
    if (!tpl_by_id.count(id)) report.unpaired_hyp.push_back(id);
  for (const auto& [id, t] : tpl_by_id)
    if (!mel_by_id.count(id)) report.unpaired_ref.push_back(id);

  int songs_ok = 0;
  long notes = 0, ca = 0, ra = 0, aa = 0;
  for (const auto& [id, m] : mel_by_id) {
    auto it = tpl_by_id.find(id);
    if (it == tpl_by_id.end()) continue;
    const ControlResult r = controllability(*m, *it->second, cfg, profiles);
    report.per_song.push_back(
        {id, r.tonality_ok ? 100.0 : 0.0, r.ca(), r.ra(), r.aa()});
    songs_ok += r.tonality_ok ? 1 : 0;
    notes += r.notes;
    ca += r.chord_ok;
    ra += r.rhythm_ok;
    aa += r.cadence_ok;
  }
  if (report.per_song.empty()) throw NoPairs("no matching ids");

  report.ta = 100.0 * songs_ok / static_cast<double>(report.per_song.size());
  if (notes > 0) {
    report.ca = 100.0 * static_cast<double>(ca) / static_cast<double>(notes);
    report.ra = 100.0 * static_cast<double>(ra) / static_cast<double>(notes);
    report.aa = 100.0 * static_cast<double>(aa) / static_cast<double>(notes);
  }
  return report;
}

}  // namespace telemelody
