// Command line front end: extract templates from MIDI corpora, turn lyrics
// into templates, generate template-constrained melodies, export alignment
// matrices and evaluate similarity / controllability metrics.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "telemelody/align.hpp"
#include "telemelody/config_io.hpp"
#include "telemelody/errors.hpp"
#include "telemelody/generator.hpp"
#include "telemelody/jsonl.hpp"
#include "telemelody/lyrics.hpp"
#include "telemelody/metrics.hpp"
#include "telemelody/midi.hpp"
#include "telemelody/pipeline.hpp"
#include "telemelody/template_extract.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace telemelody;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoOutput = 2;
constexpr int kExitIo = 3;

std::uint64_t resolve_seed(const CLI::App& cmd, std::uint64_t flag_value) {
  if (cmd.count("--seed")) return flag_value;
  if (const char* env = std::getenv("TELEMELODY_SEED"))
    return std::strtoull(env, nullptr, 10);
  return flag_value;
}

std::vector<fs::path> sorted_files(const std::string& dir,
                                   const std::string& ext) {
  std::vector<fs::path> files;
  if (!fs::is_directory(dir)) throw Error("not a directory: " + dir);
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ext)
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  return files;
}

std::vector<std::pair<std::string, Melody>> load_midi_dir(
    const std::string& dir, const KeyProfileConfig& profiles,
    std::vector<std::string>* failures) {
  std::vector<std::pair<std::string, Melody>> out;
  for (const fs::path& p : sorted_files(dir, ".mid")) {
    try {
      Melody m = preprocess_midi_bytes(read_file_bytes(p.string()), profiles,
                                       /*strict_track_selection=*/false);
      out.emplace_back(p.stem().string(), std::move(m));
    } catch (const Error& e) {
      if (failures)
        failures->push_back(p.filename().string() + ": " + e.what());
    }
  }
  return out;
}

json similarity_to_json(const SimilarityReport& r) {
  json j;
  j["corpus"] = {{"pd", r.pd}, {"dd", r.dd}, {"md", r.md}};
  json rows = json::array();
  for (const SongSimilarity& s : r.per_song)
    rows.push_back(
        {{"id", s.id}, {"pd", s.pd}, {"dd", s.dd}, {"md", s.md}});
  j["per_song"] = std::move(rows);
  j["unpaired"] = {{"hyp_only", r.unpaired_hyp}, {"ref_only", r.unpaired_ref}};
  return j;
}

json control_to_json(const ControlReport& r) {
  json j;
  j["corpus"] = {{"ta", r.ta}, {"ca", r.ca}, {"ra", r.ra}, {"aa", r.aa}};
  json rows = json::array();
  for (const SongControl& s : r.per_song)
    rows.push_back({{"id", s.id},
                    {"ta", s.ta},
                    {"ca", s.ca},
                    {"ra", s.ra},
                    {"aa", s.aa}});
  j["per_song"] = std::move(rows);
  j["unpaired"] = {{"hyp_only", r.unpaired_hyp}, {"ref_only", r.unpaired_ref}};
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write file: " + path);
  out << text;
}

std::string similarity_csv(const SimilarityReport& r) {
  std::ostringstream out;
  out << "id,pd,dd,md\n";
  for (const SongSimilarity& s : r.per_song)
    out << s.id << "," << s.pd << "," << s.dd << "," << s.md << "\n";
  return out.str();
}

std::string control_csv(const ControlReport& r) {
  std::ostringstream out;
  out << "id,ta,ca,ra,aa\n";
  for (const SongControl& s : r.per_song)
    out << s.id << "," << s.ta << "," << s.ca << "," << s.ra << "," << s.aa
        << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// extract

int cmd_extract(const std::string& in_dir, const std::string& out_path,
                std::uint64_t seed, double p_auth,
                const std::string& config_path) {
  ExtractConfig cfg;
  if (!config_path.empty()) cfg = load_extract_config(config_path);
  cfg.cadence.p_auth = p_auth;

  json manifest;
  manifest["command"] = "extract";
  manifest["seed"] = seed;
  manifest["p_auth"] = p_auth;

  std::vector<std::string> lines;
  std::vector<std::string> failures;
  for (const fs::path& p : sorted_files(in_dir, ".mid")) {
    const std::string id = p.stem().string();
    try {
      const Melody m =
          preprocess_midi_bytes(read_file_bytes(p.string()), cfg.key_profiles);
      RandomSource rng(derive_seed(seed, id));
      const Template t = extract_template(m, cfg, rng);
      lines.push_back(pair_jsonl_line(id, t, m));
    } catch (const Error& e) {
      failures.push_back(p.filename().string() + ": " + e.what());
      std::cerr << "skipping " << p.filename().string() << ": " << e.what()
                << "\n";
    }
  }

  manifest["songs"] = lines.size();
  manifest["failures"] = failures;
  std::cout << manifest.dump() << "\n";
  if (lines.empty()) return kExitNoOutput;
  write_lines(out_path, lines);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// lyric2template

std::vector<std::string> split_chord_list(const std::string& chords) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : chords) {
    if (c == ',') {
      if (!cur.empty()) parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  return parts;
}

LyricSequence lyric_sequence_from_json(const json& j, Lang default_lang,
                                       const std::string& id) {
  LyricSequence ls;
  ls.lang = j.value("lang", default_lang == Lang::Zh ? "zh" : "en") == "zh"
                ? Lang::Zh
                : Lang::En;
  ls.id = id;
  for (const auto& ju : j.at("units")) {
    LyricUnit u;
    u.text = ju.at("text").get<std::string>();
    u.word_start = ju.value("word_start", true);
    u.sentence_start = ju.value("sentence_start", false);
    const std::string p = ju.value("punct_after", "none");
    u.punct_after = p == "comma"    ? Punct::Comma
                    : p == "period" ? Punct::Period
                                    : Punct::None;
    ls.units.push_back(std::move(u));
  }
  if (ls.units.empty()) throw EmptyLyrics("no units");
  ls.units.front().sentence_start = true;
  ls.units.front().word_start = true;
  if (ls.units.back().punct_after == Punct::None)
    ls.units.back().punct_after = Punct::Period;
  return ls;
}

int cmd_lyric2template(const std::string& lyrics_path, const std::string& lang,
                       const std::string& tonality, const std::string& chords,
                       int bars_per_chord, const std::string& out_path) {
  ProgressionSpec spec;
  spec.tonality = tonality == "min" ? Mode::Minor : Mode::Major;
  spec.bars_per_chord = bars_per_chord;
  for (const std::string& name : split_chord_list(chords))
    spec.chords.push_back(parse_chord_name(name));

  const Lang language = lang == "zh" ? Lang::Zh : Lang::En;
  std::vector<std::string> lines;
  int lineno = 0;

  try {
    if (fs::path(lyrics_path).extension() == ".jsonl") {
      // one song per line: {"id","lang","units":[...]} or {"id","text"}
      for (const std::string& line : read_lines(lyrics_path)) {
        ++lineno;
        const json j = json::parse(line);
        const std::string id = j.value("id", "song_" + std::to_string(lineno));
        const Lang line_lang =
            j.value("lang", lang) == "zh" ? Lang::Zh : Lang::En;
        const LyricSequence ls =
            j.contains("units")
                ? lyric_sequence_from_json(j, language, id)
                : parse_lyrics(j.at("text").get<std::string>(), line_lang, id);
        lines.push_back(template_jsonl_line(id, lyrics_to_template(ls, spec)));
      }
    } else {
      // plain text: the whole file is one song
      std::ifstream in(lyrics_path);
      if (!in) throw Error("cannot open file: " + lyrics_path);
      std::string text((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
      const std::string id = fs::path(lyrics_path).stem().string();
      lines.push_back(template_jsonl_line(
          id, lyrics_to_template(parse_lyrics(text, language, id), spec)));
    }
  } catch (const std::exception& e) {
    std::cerr << "line " << lineno << ": " << e.what() << "\n";
    return kExitNoOutput;
  }

  if (lines.empty()) return kExitNoOutput;
  write_lines(out_path, lines);
  json manifest;
  manifest["command"] = "lyric2template";
  manifest["lang"] = lang;
  manifest["tonality"] = tonality;
  manifest["chords"] = chords;
  manifest["bars_per_chord"] = bars_per_chord;
  manifest["songs"] = lines.size();
  std::cout << manifest.dump() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// generate

int cmd_generate(const std::string& templates_path, const std::string& out_dir,
                 std::uint64_t seed, double temperature, int top_k) {
  SamplerConfig cfg;
  cfg.seed = seed;
  cfg.temperature = temperature;
  cfg.top_k = top_k;

  fs::create_directories(out_dir);

  json config;
  config["command"] = "generate";
  config["seed"] = seed;
  config["temperature"] = temperature;
  config["top_k"] = top_k;
  config["pitch_range"] = {cfg.pitch_low, cfg.pitch_high};
  config["chord_tone_weight"] = cfg.chord_tone_weight;
  config["scale_tone_weight"] = cfg.scale_tone_weight;
  config["max_leap"] = cfg.max_leap;

  std::vector<std::string> manifest_lines;
  manifest_lines.push_back(json{{"config", config}}.dump());

  int successes = 0;
  for (const std::string& line : read_lines(templates_path)) {
    std::string id;
    try {
      auto [parsed_id, tmpl] = parse_template_jsonl_line(line);
      id = parsed_id;
      SamplerConfig song_cfg = cfg;
      song_cfg.seed = derive_seed(seed, id);
      const Melody m = generate(tmpl, song_cfg);
      const std::string file = id + ".mid";
      write_file_bytes((fs::path(out_dir) / file).string(), write_midi(m));
      manifest_lines.push_back(json{{"id", id},
                                    {"file", file},
                                    {"notes", m.notes.size()},
                                    {"seed", song_cfg.seed}}
                                   .dump());
      ++successes;
    } catch (const std::exception& e) {
      std::cerr << "skipping template " << (id.empty() ? "?" : id) << ": "
                << e.what() << "\n";
    }
  }

  write_lines((fs::path(out_dir) / "manifest.jsonl").string(), manifest_lines);
  std::cout << config.dump() << "\n";
  return successes > 0 ? kExitOk : kExitNoOutput;
}

// ---------------------------------------------------------------------------
// eval / eval-control

int cmd_eval(const std::string& hyp_dir, const std::string& ref_dir,
             const std::string& out_path, const std::string& csv_path) {
  std::vector<std::string> failures;
  const auto hyp = load_midi_dir(hyp_dir, {}, &failures);
  const auto ref = load_midi_dir(ref_dir, {}, &failures);
  for (const std::string& f : failures) std::cerr << f << "\n";

  SimilarityReport report;
  try {
    report = evaluate_similarity(hyp, ref);
  } catch (const NoPairs& e) {
    std::cerr << e.what() << "\n";
    return kExitNoOutput;
  }

  const json j = similarity_to_json(report);
  std::cout << j.dump(2) << "\n";
  if (!out_path.empty()) write_text(out_path, j.dump(2) + "\n");
  if (!csv_path.empty()) write_text(csv_path, similarity_csv(report));
  const bool pairing_error =
      !report.unpaired_hyp.empty() || !report.unpaired_ref.empty();
  return pairing_error ? kExitNoOutput : kExitOk;
}

int cmd_eval_control(const std::string& midi_dir,
                     const std::string& templates_path,
                     const std::string& out_path,
                     const std::string& csv_path) {
  std::vector<std::string> failures;
  const auto melodies = load_midi_dir(midi_dir, {}, &failures);
  for (const std::string& f : failures) std::cerr << f << "\n";

  std::vector<std::pair<std::string, Template>> templates;
  for (const std::string& line : read_lines(templates_path))
    templates.push_back(parse_template_jsonl_line(line));

  ControlReport report;
  try {
    report = evaluate_control(melodies, templates);
  } catch (const NoPairs& e) {
    std::cerr << e.what() << "\n";
    return kExitNoOutput;
  }

  const json j = control_to_json(report);
  std::cout << j.dump(2) << "\n";
  if (!out_path.empty()) write_text(out_path, j.dump(2) + "\n");
  if (!csv_path.empty()) write_text(csv_path, control_csv(report));
  const bool pairing_error =
      !report.unpaired_hyp.empty() || !report.unpaired_ref.empty();
  return pairing_error ? kExitNoOutput : kExitOk;
}

// ---------------------------------------------------------------------------
// align

int cmd_align(int n_notes, const std::string& out_path, double lambda) {
  if (n_notes < 1) {
    std::cerr << "--notes must be at least 1\n";
    return kExitNoOutput;
  }
  const AlignmentMatrix m = build_alignment(n_notes);

  json j;
  j["n_notes"] = n_notes;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["lambda_attn"] = lambda;
  auto to_rows = [](const Mat& mat, bool as_int) {
    json rows = json::array();
    for (int r = 0; r < mat.rows; ++r) {
      json row = json::array();
      for (int c = 0; c < mat.cols; ++c) {
        if (as_int)
          row.push_back(static_cast<int>(mat.at(r, c)));
        else
          row.push_back(mat.at(r, c));
      }
      rows.push_back(std::move(row));
    }
    return rows;
  };
  j["w_hat"] = to_rows(m.w_hat, true);
  j["w"] = to_rows(m.w, false);

  std::cout << j.dump() << "\n";
  if (!out_path.empty()) write_text(out_path, j.dump(2) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Template-based lyric-to-melody toolkit"};
  app.require_subcommand(1);

  // extract
  std::string ex_in, ex_out, ex_config;
  std::uint64_t ex_seed = 0;
  double ex_p_auth = 0.3;
  auto* extract = app.add_subcommand(
      "extract", "Extract template-melody pairs from a MIDI directory");
  extract->add_option("--in", ex_in, "directory of .mid files")->required();
  extract->add_option("--out", ex_out, "output pairs JSONL")->required();
  extract->add_option("--seed", ex_seed, "random seed");
  extract->add_option("--p-auth", ex_p_auth,
                      "probability of the optional authentic cadence");
  extract->add_option("--config", ex_config, "extraction config file");

  // lyric2template
  std::string l2t_lyrics, l2t_lang = "en", l2t_ton = "maj", l2t_chords = "C",
              l2t_out;
  int l2t_bars_per_chord = 1;
  auto* l2t =
      app.add_subcommand("lyric2template", "Turn lyrics into templates");
  l2t->add_option("--lyrics", l2t_lyrics, "lyrics file (.txt or .jsonl)")
      ->required();
  l2t->add_option("--lang", l2t_lang, "en or zh")
      ->check(CLI::IsMember({"en", "zh"}));
  l2t->add_option("--tonality", l2t_ton, "maj or min")
      ->check(CLI::IsMember({"maj", "min"}));
  l2t->add_option("--chords", l2t_chords, "progression, e.g. Am,F,C,G");
  l2t->add_option("--bars-per-chord", l2t_bars_per_chord, "bars per chord");
  l2t->add_option("--out", l2t_out, "output template JSONL")->required();

  // generate
  std::string gen_templates, gen_out;
  std::uint64_t gen_seed = 0;
  double gen_temperature = 0.5;
  int gen_topk = 10;
  auto* gen =
      app.add_subcommand("generate", "Generate melodies from templates");
  gen->add_option("--templates", gen_templates, "template JSONL")->required();
  gen->add_option("--out", gen_out, "output directory")->required();
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--temperature", gen_temperature, "sampling temperature");
  gen->add_option("--topk", gen_topk, "top-k cutoff");

  // eval
  std::string eval_hyp, eval_ref, eval_out = "similarity.json", eval_csv;
  auto* eval = app.add_subcommand(
      "eval", "Similarity metrics between two MIDI directories");
  eval->add_option("--hyp", eval_hyp, "hypothesis directory")->required();
  eval->add_option("--ref", eval_ref, "reference directory")->required();
  eval->add_option("--out", eval_out, "report file");
  eval->add_option("--csv", eval_csv, "per-song rows as CSV");

  // eval-control
  std::string ec_midi, ec_templates, ec_out = "control.json", ec_csv;
  auto* ec = app.add_subcommand(
      "eval-control", "Controllability metrics of melodies vs templates");
  ec->add_option("--midi", ec_midi, "melody directory")->required();
  ec->add_option("--templates", ec_templates, "template JSONL")->required();
  ec->add_option("--out", ec_out, "report file");
  ec->add_option("--csv", ec_csv, "per-song rows as CSV");

  // align
  int align_notes = 0;
  std::string align_out;
  double align_lambda = 0.05;
  auto* align = app.add_subcommand(
      "align", "Export the rule-based alignment matrix for N notes");
  align->add_option("--notes", align_notes, "note count")->required();
  align->add_option("--out", align_out, "output JSON file");
  align->add_option("--lambda", align_lambda, "loss weight metadata");

  CLI11_PARSE(app, argc, argv);

  try {
    if (extract->parsed())
      return cmd_extract(ex_in, ex_out, resolve_seed(*extract, ex_seed),
                         ex_p_auth, ex_config);
    if (l2t->parsed())
      return cmd_lyric2template(l2t_lyrics, l2t_lang, l2t_ton, l2t_chords,
                                l2t_bars_per_chord, l2t_out);
    if (gen->parsed())
      return cmd_generate(gen_templates, gen_out, resolve_seed(*gen, gen_seed),
                          gen_temperature, gen_topk);
    if (eval->parsed())
      return cmd_eval(eval_hyp, eval_ref, eval_out, eval_csv);
    if (ec->parsed())
      return cmd_eval_control(ec_midi, ec_templates, ec_out, ec_csv);
    if (align->parsed()) return cmd_align(align_notes, align_out, align_lambda);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitNoOutput;
}
