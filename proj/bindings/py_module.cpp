// Python bindings for the core operations: preprocessing, template
// extraction, lyric-to-template rules, generation, alignment math and
// the evaluation metrics.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "telemelody/align.hpp"
#include "telemelody/errors.hpp"
#include "telemelody/generator.hpp"
#include "telemelody/jsonl.hpp"
#include "telemelody/lyrics.hpp"
#include "telemelody/metrics.hpp"
#include "telemelody/midi.hpp"
#include "telemelody/pipeline.hpp"
#include "telemelody/template_extract.hpp"
#include "telemelody/tokens.hpp"

namespace py = pybind11;
using namespace telemelody;

namespace {

Mat mat_from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) return Mat();
  Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows; ++r) {
    if (static_cast<int>(rows[r].size()) != m.cols)
      throw ShapeMismatch("ragged rows");
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

std::vector<std::vector<double>> rows_from_mat(const Mat& m) {
  std::vector<std::vector<double>> rows(m.rows);
  for (int r = 0; r < m.rows; ++r) {
    rows[r].resize(m.cols);
    for (int c = 0; c < m.cols; ++c) rows[r][c] = m.at(r, c);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_telemelody, m) {
  m.doc() = "Template-based lyric-to-melody toolkit";

  py::register_exception<Error>(m, "TeleMelodyError");

  py::class_<Note>(m, "Note")
      .def(py::init<>())
      .def(py::init([](int bar, int pos, int pitch, int dur) {
             return Note{bar, pos, pitch, dur};
           }),
           py::arg("bar"), py::arg("pos"), py::arg("pitch"), py::arg("dur"))
      .def_readwrite("bar", &Note::bar)
      .def_readwrite("pos", &Note::pos)
      .def_readwrite("pitch", &Note::pitch)
      .def_readwrite("dur", &Note::dur)
      .def("onset", &Note::onset)
      .def("__eq__", [](const Note& a, const Note& b) { return a == b; })
      .def("__repr__", [](const Note& n) {
        return "Note(bar=" + std::to_string(n.bar) +
               ", pos=" + std::to_string(n.pos) +
               ", pitch=" + std::to_string(n.pitch) +
               ", dur=" + std::to_string(n.dur) + ")";
      });

  py::class_<Melody>(m, "Melody")
      .def(py::init<>())
      .def(py::init([](const std::vector<Note>& notes) {
             Melody mel;
             mel.notes = notes;
             return mel;
           }),
           py::arg("notes"))
      .def_readwrite("notes", &Melody::notes)
      .def("__len__", [](const Melody& mel) { return mel.notes.size(); })
      .def("__eq__", [](const Melody& a, const Melody& b) { return a == b; });

  // Melodies cross the boundary as Note lists; templates as token strings.
  m.def("preprocess_midi_bytes", [](py::bytes data, bool strict) {
    const std::string s = data;
    return preprocess_midi_bytes(
        std::vector<std::uint8_t>(s.begin(), s.end()), {}, strict);
  },
        py::arg("data"), py::arg("strict_track_selection") = true);

  m.def("melody_to_midi_bytes", [](const Melody& mel) {
    const auto bytes = write_midi(mel);
    return py::bytes(reinterpret_cast<const char*>(bytes.data()),
                     bytes.size());
  });

  m.def("encode_melody",
        [](const Melody& mel) { return melody_token_strings(mel); });
  m.def("decode_melody", [](const std::vector<std::string>& tokens) {
    return melody_from_token_strings(tokens);
  });

  m.def(
      "extract_template",
      [](const Melody& mel, double p_auth, std::uint64_t seed) {
        ExtractConfig cfg;
        cfg.cadence.p_auth = p_auth;
        RandomSource rng(seed);
        return template_token_strings(extract_template(mel, cfg, rng));
      },
      py::arg("melody"), py::arg("p_auth") = 0.3, py::arg("seed") = 0);

  m.def(
      "infer_tonality",
      [](const Melody& mel) {
        const Key k = infer_tonality(mel);
        return std::make_pair(k.root,
                              std::string(k.mode == Mode::Major ? "maj" : "min"));
      },
      py::arg("melody"));

  m.def(
      "lyrics_to_template",
      [](const std::string& text, const std::string& lang,
         const std::string& tonality, const std::vector<std::string>& chords,
         int bars_per_chord) {
        ProgressionSpec spec;
        spec.tonality = tonality == "min" ? Mode::Minor : Mode::Major;
        spec.bars_per_chord = bars_per_chord;
        for (const std::string& name : chords)
          spec.chords.push_back(parse_chord_name(name));
        const LyricSequence ls =
            parse_lyrics(text, lang == "zh" ? Lang::Zh : Lang::En);
        return template_token_strings(lyrics_to_template(ls, spec));
      },
      py::arg("text"), py::arg("lang") = "en", py::arg("tonality") = "maj",
      py::arg("chords") = std::vector<std::string>{"C"},
      py::arg("bars_per_chord") = 1);

  m.def(
      "lyric_rhythm_onsets",
      [](const std::string& text, const std::string& lang) {
        return rhythm_onsets(
            parse_lyrics(text, lang == "zh" ? Lang::Zh : Lang::En));
      },
      py::arg("text"), py::arg("lang") = "en");

  m.def("syllabify_word", &syllabify_word, py::arg("word"));

  m.def(
      "generate",
      [](const std::vector<std::string>& template_tokens, std::uint64_t seed,
         double temperature, int top_k) {
        SamplerConfig cfg;
        cfg.seed = seed;
        cfg.temperature = temperature;
        cfg.top_k = top_k;
        return generate(template_from_token_strings(template_tokens), cfg);
      },
      py::arg("template_tokens"), py::arg("seed") = 0,
      py::arg("temperature") = 0.5, py::arg("top_k") = 10);

  m.def("build_alignment", [](int n_notes) {
    const AlignmentMatrix a = build_alignment(n_notes);
    return std::make_pair(rows_from_mat(a.w_hat), rows_from_mat(a.w));
  });

  m.def(
      "attn_loss",
      [](int n_notes, const std::vector<std::vector<double>>& attention) {
        return attn_loss(build_alignment(n_notes), mat_from_rows(attention));
      },
      py::arg("n_notes"), py::arg("attention"));

  m.def(
      "attn_loss_grad",
      [](int n_notes, const std::vector<std::vector<double>>& logits) {
        return rows_from_mat(
            attn_loss_grad(build_alignment(n_notes), mat_from_rows(logits)));
      },
      py::arg("n_notes"), py::arg("logits"));

  m.def(
      "pd_dd",
      [](const Melody& hyp, const Melody& ref) { return pd_dd(hyp, ref); },
      py::arg("hyp"), py::arg("ref"));

  m.def("melody_distance", &melody_distance, py::arg("hyp"), py::arg("ref"));

  m.def(
      "controllability",
      [](const Melody& mel, const std::vector<std::string>& template_tokens) {
        const ControlResult r =
            controllability(mel, template_from_token_strings(template_tokens));
        py::dict out;
        out["ta"] = r.tonality_ok ? 100.0 : 0.0;
        out["ca"] = r.ca();
        out["ra"] = r.ra();
        out["aa"] = r.aa();
        return out;
      },
      py::arg("melody"), py::arg("template_tokens"));
}
