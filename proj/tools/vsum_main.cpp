// Command line front end. Verbs map onto the library pipeline; all
// human-readable progress goes to stderr and stdout carries exactly one
// JSON record per invocation so runs can be piped.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vsum/errors.hpp"
#include "vsum/kv.hpp"
#include "vsum/pipeline.hpp"

using nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

// Every tunable the verbs share. Config-file keys are the long flag
// names without the leading dashes; command line values win.
struct CliState {
    std::string config_path;

    std::string media;
    std::string srt;
    std::string out;
    std::string video_id;

    std::string mode = "intersect";
    // edmundson joins only when listed explicitly
    std::string algorithms = "luhn,lsa,textrank,lexrank";
    std::string p_select;
    std::map<std::string, std::string> p_override;  // algorithm name -> p text

    std::string weights;
    bool learn = true;
    bool seed_first = true;

    std::int64_t merge_gap_ms = 500;
    std::string cut_tool = "ffmpeg";

    std::string bonus_words;
    std::string stigma_words;
    std::string null_words;

    int luhn_cutoff = 2;
    bool luhn_count_once = false;
    int lsa_topics = 3;
    double textrank_damping = 0.85;
    double textrank_epsilon = 1e-6;
    int textrank_max_iter = 200;
    double lexrank_threshold = 0.0;

    std::string backend = "none";  // none | stub | http
    std::string stub_fixtures;
    std::string asr_url;
    std::string asr_path = "/transcribe";
    std::string asr_token_env = "VSUM_ASR_TOKEN";
    int asr_timeout_s = 30;
    int asr_parallelism = 2;
    int asr_attempts = 3;
    int asr_backoff_ms = 100;
    int asr_backoff_cap_ms = 2000;

    std::int64_t max_interval_ms = 6000;
    double silence_threshold = 0.01;
    std::int64_t min_silence_ms = 300;
    std::int64_t frame_ms = 20;
};

int parse_int(const std::string& key, const std::string& text) {
    try {
        size_t used = 0;
        int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw vsum::InvalidConfig(key + ": expected an integer, got '" + text + "'");
    }
}

std::int64_t parse_int64(const std::string& key, const std::string& text) {
    try {
        size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw vsum::InvalidConfig(key + ": expected an integer, got '" + text + "'");
    }
}

double parse_num(const std::string& key, const std::string& text) {
    try {
        size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw vsum::InvalidConfig(key + ": expected a number, got '" + text + "'");
    }
}

bool parse_bool(const std::string& key, const std::string& text) {
    if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
    if (text == "false" || text == "0" || text == "no" || text == "off") return false;
    throw vsum::InvalidConfig(key + ": expected a boolean, got '" + text + "'");
}

// An integer is a sentence count, anything with a decimal point is a
// ratio of the track size.
vsum::PSelect parse_p(const std::string& key, const std::string& text) {
    if (text.find('.') == std::string::npos)
        return vsum::PSelect::from_count(parse_int(key, text));
    return vsum::PSelect::from_ratio(parse_num(key, text));
}

void apply_key(CliState& s, const std::string& key, const std::string& value) {
    if (key == "media") s.media = value;
    else if (key == "srt") s.srt = value;
    else if (key == "out") s.out = value;
    else if (key == "video-id") s.video_id = value;
    else if (key == "mode") s.mode = value;
    else if (key == "algorithms") s.algorithms = value;
    else if (key == "p-select") s.p_select = value;
    else if (key == "p-luhn") s.p_override["luhn"] = value;
    else if (key == "p-lsa") s.p_override["lsa"] = value;
    else if (key == "p-textrank") s.p_override["textrank"] = value;
    else if (key == "p-lexrank") s.p_override["lexrank"] = value;
    else if (key == "p-edmundson") s.p_override["edmundson"] = value;
    else if (key == "weights") s.weights = value;
    else if (key == "learn") s.learn = parse_bool(key, value);
    else if (key == "seed-first") s.seed_first = parse_bool(key, value);
    else if (key == "merge-gap-ms") s.merge_gap_ms = parse_int64(key, value);
    else if (key == "cut-tool") s.cut_tool = value;
    else if (key == "bonus-words") s.bonus_words = value;
    else if (key == "stigma-words") s.stigma_words = value;
    else if (key == "null-words") s.null_words = value;
    else if (key == "luhn-cutoff") s.luhn_cutoff = parse_int(key, value);
    else if (key == "luhn-count-once") s.luhn_count_once = parse_bool(key, value);
    else if (key == "lsa-topics") s.lsa_topics = parse_int(key, value);
    else if (key == "textrank-damping") s.textrank_damping = parse_num(key, value);
    else if (key == "textrank-epsilon") s.textrank_epsilon = parse_num(key, value);
    else if (key == "textrank-max-iter") s.textrank_max_iter = parse_int(key, value);
    else if (key == "lexrank-threshold") s.lexrank_threshold = parse_num(key, value);
    else if (key == "backend") s.backend = value;
    else if (key == "stub-fixtures") s.stub_fixtures = value;
    else if (key == "asr-url") s.asr_url = value;
    else if (key == "asr-path") s.asr_path = value;
    else if (key == "asr-token-env") s.asr_token_env = value;
    else if (key == "asr-timeout-s") s.asr_timeout_s = parse_int(key, value);
    else if (key == "asr-parallelism") s.asr_parallelism = parse_int(key, value);
    else if (key == "asr-attempts") s.asr_attempts = parse_int(key, value);
    else if (key == "asr-backoff-ms") s.asr_backoff_ms = parse_int(key, value);
    else if (key == "asr-backoff-cap-ms") s.asr_backoff_cap_ms = parse_int(key, value);
    else if (key == "max-interval-ms") s.max_interval_ms = parse_int64(key, value);
    else if (key == "silence-threshold") s.silence_threshold = parse_num(key, value);
    else if (key == "min-silence-ms") s.min_silence_ms = parse_int64(key, value);
    else if (key == "frame-ms") s.frame_ms = parse_int64(key, value);
    else throw vsum::InvalidConfig("unknown config key '" + key + "'");
}

void apply_document(CliState& s, const vsum::kv::Document& doc) {
    for (const auto& key : doc.keys()) apply_key(s, key, doc.get(key));
}

std::vector<vsum::Algorithm> parse_algorithms(const std::string& csv) {
    std::vector<vsum::Algorithm> out;
    size_t pos = 0;
    while (pos <= csv.size()) {
        size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        std::string name = csv.substr(pos, comma - pos);
        if (!name.empty()) {
            auto a = vsum::algorithm_from_name(name);
            if (!a) throw vsum::InvalidConfig("unknown algorithm '" + name + "'");
            out.push_back(*a);
        }
        pos = comma + 1;
    }
    if (out.empty()) throw vsum::InvalidConfig("no algorithms selected");
    return out;
}

std::unique_ptr<vsum::RecognizerBackend> make_backend(const CliState& s) {
    if (s.backend == "none") return nullptr;
    if (s.backend == "stub") {
        if (s.stub_fixtures.empty())
            throw vsum::InvalidConfig("stub backend needs --stub-fixtures");
        return std::make_unique<vsum::OfflineStub>(vsum::OfflineStub::from_file(s.stub_fixtures));
    }
    if (s.backend == "http") {
        if (s.asr_url.empty()) throw vsum::InvalidConfig("http backend needs --asr-url");
        vsum::RemoteHttp::Options opt;
        opt.base_url = s.asr_url;
        opt.path = s.asr_path;
        opt.token_env = s.asr_token_env;
        opt.timeout_seconds = s.asr_timeout_s;
        return std::make_unique<vsum::RemoteHttp>(opt);
    }
    throw vsum::InvalidConfig("unknown backend '" + s.backend + "' (none|stub|http)");
}

vsum::RunConfig make_run_config(const CliState& s, vsum::RecognizerBackend* backend) {
    vsum::RunConfig cfg;
    cfg.media_path = s.media;
    cfg.srt_path = s.srt;
    cfg.output_dir = s.out;
    cfg.video_id = s.video_id;

    auto mode = vsum::run_mode_from_name(s.mode);
    if (!mode) throw vsum::InvalidConfig("unknown mode '" + s.mode + "'");
    cfg.mode = *mode;
    cfg.algorithms = parse_algorithms(s.algorithms);

    if (!s.p_select.empty()) cfg.summary.p_select = parse_p("p-select", s.p_select);
    for (const auto& [name, text] : s.p_override) {
        if (text.empty()) continue;  // flag binding pre-creates empty slots
        cfg.p_overrides[*vsum::algorithm_from_name(name)] = parse_p("p-" + name, text);
    }

    cfg.summary.luhn_significance_cutoff = s.luhn_cutoff;
    cfg.summary.luhn_count_each_occurrence = !s.luhn_count_once;
    cfg.summary.lsa_topics = s.lsa_topics;
    cfg.summary.textrank_damping = s.textrank_damping;
    cfg.summary.textrank_epsilon = s.textrank_epsilon;
    cfg.summary.textrank_max_iter = s.textrank_max_iter;
    cfg.summary.lexrank_centroid_threshold = s.lexrank_threshold;

    cfg.weights_path = s.weights;
    cfg.update_weights_after_run = s.learn;
    cfg.merge_gap_ms = s.merge_gap_ms;
    cfg.cut_tool = s.cut_tool;
    cfg.bonus_path = s.bonus_words;
    cfg.stigma_path = s.stigma_words;
    cfg.null_path = s.null_words;

    cfg.backend = backend;
    cfg.transcribe.parallelism = s.asr_parallelism;
    cfg.transcribe.attempts = s.asr_attempts;
    cfg.transcribe.backoff_initial_ms = s.asr_backoff_ms;
    cfg.transcribe.backoff_cap_ms = s.asr_backoff_cap_ms;

    cfg.segmentation.max_interval_ms = s.max_interval_ms;
    cfg.segmentation.silence_threshold = s.silence_threshold;
    cfg.segmentation.min_silence_ms = s.min_silence_ms;
    cfg.segmentation.frame_ms = s.frame_ms;
    return cfg;
}

ordered_json summary_json(const vsum::RunSummary& s) {
    ordered_json j;
    j["video_id"] = s.video_id;
    j["mode"] = std::string(vsum::run_mode_name(s.mode));
    j["n_cues"] = s.n_cues;
    j["selected"] = s.selected;
    j["subtitles_generated"] = s.subtitles_generated;
    if (s.subtitles_generated) {
        j["n_chunks"] = s.n_chunks;
        j["n_failed_chunks"] = s.n_failed_chunks;
    }
    ordered_json per;
    for (const auto& [algo, count] : s.per_algorithm_selected)
        per[std::string(vsum::algorithm_name(algo))] = count;
    if (!per.is_null()) j["per_algorithm_selected"] = per;
    if (s.has_report) {
        ordered_json rep;
        rep["n_combined"] = s.report.n_combined;
        ordered_json rows;
        for (const auto& [algo, row] : s.report.per_algorithm) {
            ordered_json r;
            r["n_selected"] = row.n_algorithm;
            r["efficiency"] = row.efficiency;
            rows[std::string(vsum::algorithm_name(algo))] = r;
        }
        rep["per_algorithm"] = rows;
        j["report"] = rep;
    }
    if (s.mode == vsum::RunMode::Weighted) {
        ordered_json names = ordered_json::array();
        for (vsum::Algorithm a : s.ranking) names.push_back(std::string(vsum::algorithm_name(a)));
        j["ranking"] = names;
        j["weights_updated"] = s.weights_updated;
    }
    j["outputs"] = s.outputs;
    return j;
}

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

// The per-run report file parsed back for corpus aggregation.
vsum::EfficiencyReport parse_report_kv(const std::string& path) {
    vsum::kv::Document doc = vsum::kv::Document::load(path);
    vsum::EfficiencyReport report;
    report.video_id = doc.get("video_id");
    report.n_combined = parse_int("n_combined", doc.get("n_combined"));
    for (const auto& key : doc.keys()) {
        size_t dot = key.find('.');
        if (dot == std::string::npos) continue;
        auto algo = vsum::algorithm_from_name(key.substr(0, dot));
        if (!algo) throw vsum::InvalidConfig(path + ": unknown algorithm in key '" + key + "'");
        std::string field = key.substr(dot + 1);
        auto& row = report.per_algorithm[*algo];
        if (field == "n_selected") row.n_algorithm = parse_int(key, doc.get(key));
        else if (field == "efficiency") row.efficiency = parse_num(key, doc.get(key));
        else throw vsum::InvalidConfig(path + ": unknown report field '" + key + "'");
    }
    return report;
}

void write_corpus_outputs(const vsum::CorpusReport& corpus, const std::string& out_dir,
                          ordered_json& record) {
    fs::create_directories(out_dir);
    std::string table_path = (fs::path(out_dir) / "corpus_report.txt").string();
    std::string kv_path = (fs::path(out_dir) / "corpus_report.kv").string();
    vsum::kv::write_file_atomic(table_path, vsum::render_corpus_table(corpus));
    vsum::kv::write_file_atomic(kv_path, vsum::render_corpus_kv(corpus));
    ordered_json means;
    for (const auto& [algo, ratio] : corpus.mean_ratio)
        means[std::string(vsum::algorithm_name(algo))] = ratio;
    record["videos"] = corpus.rows.size();
    record["mean_efficiency"] = means;
    record["outputs"] = {{"corpus_table", table_path}, {"corpus_kv", kv_path}};
}

int run_summarize(const CliState& state) {
    auto backend = make_backend(state);
    vsum::RunConfig cfg = make_run_config(state, backend.get());
    std::cerr << "[vsum] summarizing " << cfg.resolved_video_id() << "\n";
    vsum::RunSummary summary = vsum::run(cfg);
    std::cerr << "[vsum] wrote " << summary.outputs.size() << " files to " << cfg.output_dir
              << "\n";
    emit(summary_json(summary));
    return 0;
}

int run_generate(const CliState& state) {
    auto backend = make_backend(state);
    if (!backend) throw vsum::InvalidConfig("generate-subtitles needs --backend stub or http");
    vsum::RunConfig cfg = make_run_config(state, backend.get());
    std::cerr << "[vsum] transcribing " << cfg.resolved_video_id() << "\n";
    vsum::RunSummary summary = vsum::generate_subtitles(cfg);
    std::cerr << "[vsum] recognized " << summary.n_cues << " cues from " << summary.n_chunks
              << " chunks\n";
    emit(summary_json(summary));
    return 0;
}

int run_batch(const CliState& base, const std::vector<std::string>& item_files) {
    if (base.out.empty()) throw vsum::InvalidConfig("batch needs --out for the corpus report");

    std::vector<vsum::RunConfig> corpus;
    std::vector<std::unique_ptr<vsum::RecognizerBackend>> backends;
    for (const auto& file : item_files) {
        CliState item = base;
        item.out.clear();
        item.video_id.clear();
        apply_document(item, vsum::kv::Document::load(file));
        std::string stem = fs::path(file).stem().string();
        if (item.out.empty()) item.out = (fs::path(base.out) / stem).string();
        if (item.video_id.empty()) item.video_id = stem;
        backends.push_back(make_backend(item));
        corpus.push_back(make_run_config(item, backends.back().get()));
    }

    vsum::BatchOptions options;
    options.seed_first = base.seed_first;
    std::cerr << "[vsum] batch of " << corpus.size() << " runs\n";
    vsum::BatchResult result = vsum::batch(corpus, options);
    for (const auto& f : result.failures)
        std::cerr << "[vsum] item " << f.index << " (" << f.video_id << ") failed: " << f.message
                  << "\n";
    std::cerr << "[vsum] " << result.runs.size() << " of " << corpus.size() << " runs succeeded\n";

    ordered_json record;
    record["items"] = item_files.size();
    record["succeeded"] = result.runs.size();
    ordered_json failures = ordered_json::array();
    for (const auto& f : result.failures)
        failures.push_back({{"index", f.index},
                            {"video_id", f.video_id},
                            {"error", f.message},
                            {"exit_code", vsum::exit_code(f.error_class)}});
    record["failures"] = failures;
    write_corpus_outputs(result.corpus, base.out, record);
    emit(record);
    return 0;
}

int run_report(const CliState& state, const std::vector<std::string>& report_files) {
    if (state.out.empty()) throw vsum::InvalidConfig("report needs --out");
    std::vector<vsum::EfficiencyReport> rows;
    for (const auto& file : report_files) rows.push_back(parse_report_kv(file));
    vsum::CorpusReport corpus = vsum::corpus_report(rows);
    ordered_json record;
    record["items"] = report_files.size();
    write_corpus_outputs(corpus, state.out, record);
    std::cerr << "[vsum] aggregated " << rows.size() << " reports\n";
    emit(record);
    return 0;
}

int run_weights_show(const std::string& path) {
    vsum::EnsembleWeights w = vsum::EnsembleWeights::load(path);
    ordered_json record;
    record["path"] = path;
    ordered_json values;
    for (vsum::Algorithm a : vsum::kAllAlgorithms)
        values[std::string(vsum::algorithm_name(a))] = w.weight_text(a);
    record["weights"] = values;
    record["delta"] = w.delta_text();
    emit(record);
    return 0;
}

int run_weights_reset(const std::string& path) {
    vsum::EnsembleWeights::defaults().save(path);
    std::cerr << "[vsum] weights reset\n";
    ordered_json record;
    record["path"] = path;
    record["reset"] = true;
    emit(record);
    return 0;
}

void add_asr_flags(CLI::App* cmd, CliState& s) {
    cmd->add_option("--backend", s.backend, "recognition backend: none, stub or http");
    cmd->add_option("--stub-fixtures", s.stub_fixtures, "fixture map for the stub backend");
    cmd->add_option("--asr-url", s.asr_url, "recognition service base URL");
    cmd->add_option("--asr-path", s.asr_path, "recognition service route");
    cmd->add_option("--asr-token-env", s.asr_token_env,
                    "environment variable holding the bearer token");
    cmd->add_option("--asr-timeout-s", s.asr_timeout_s, "per-request timeout");
    cmd->add_option("--asr-parallelism", s.asr_parallelism, "concurrent transcriptions");
    cmd->add_option("--asr-attempts", s.asr_attempts, "tries per chunk");
    cmd->add_option("--asr-backoff-ms", s.asr_backoff_ms, "initial retry delay");
    cmd->add_option("--asr-backoff-cap-ms", s.asr_backoff_cap_ms, "retry delay cap");
    cmd->add_option("--max-interval-ms", s.max_interval_ms, "hard cap per speech chunk");
    cmd->add_option("--silence-threshold", s.silence_threshold,
                    "silence RMS as a fraction of full scale");
    cmd->add_option("--min-silence-ms", s.min_silence_ms, "minimum pause that splits chunks");
    cmd->add_option("--frame-ms", s.frame_ms, "RMS analysis frame");
}

void add_summary_flags(CLI::App* cmd, CliState& s) {
    cmd->add_option("--mode", s.mode, "single, intersect or weighted");
    cmd->add_option("--algorithms", s.algorithms, "comma-separated algorithm list");
    cmd->add_option("--p-select", s.p_select,
                    "sentences to keep: integer count or ratio like 0.2");
    cmd->add_option("--p-luhn", s.p_override["luhn"], "per-algorithm p override");
    cmd->add_option("--p-lsa", s.p_override["lsa"], "per-algorithm p override");
    cmd->add_option("--p-textrank", s.p_override["textrank"], "per-algorithm p override");
    cmd->add_option("--p-lexrank", s.p_override["lexrank"], "per-algorithm p override");
    cmd->add_option("--p-edmundson", s.p_override["edmundson"], "per-algorithm p override");
    cmd->add_option("--weights", s.weights, "weight state file (weighted mode)");
    cmd->add_flag("!--no-learn", s.learn, "vote with stored weights but skip the update");
    cmd->add_option("--merge-gap-ms", s.merge_gap_ms, "merge cut segments closer than this");
    cmd->add_option("--cut-tool", s.cut_tool, "media tool named in the cut script");
    cmd->add_option("--bonus-words", s.bonus_words, "cue-word bonus lexicon");
    cmd->add_option("--stigma-words", s.stigma_words, "cue-word stigma lexicon");
    cmd->add_option("--null-words", s.null_words, "cue-word null lexicon");
    cmd->add_option("--luhn-cutoff", s.luhn_cutoff, "significant-word frequency cutoff");
    cmd->add_flag("--luhn-count-once", s.luhn_count_once,
                  "score each significant word once per sentence");
    cmd->add_option("--lsa-topics", s.lsa_topics, "topics kept in the topic method");
    cmd->add_option("--textrank-damping", s.textrank_damping, "graph damping factor");
    cmd->add_option("--textrank-epsilon", s.textrank_epsilon, "iteration stop threshold");
    cmd->add_option("--textrank-max-iter", s.textrank_max_iter, "iteration cap");
    cmd->add_option("--lexrank-threshold", s.lexrank_threshold, "centroid tf-idf threshold");
}

void add_io_flags(CLI::App* cmd, CliState& s) {
    cmd->add_option("--config", s.config_path, "flat key-value config file");
    cmd->add_option("--media", s.media, "source media (16-bit PCM WAV)");
    cmd->add_option("--out", s.out, "output directory");
    cmd->add_option("--video-id", s.video_id, "report row id (defaults to the input stem)");
}

// The config file is applied before CLI11 parses, so explicit flags
// overwrite config values.
std::string find_config_arg(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--config" && i + 1 < argc) return argv[i + 1];
        if (arg.rfind("--config=", 0) == 0) return arg.substr(9);
    }
    return "";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"subtitle-driven video summarizer"};
    app.require_subcommand(1);

    CliState state;
    std::vector<std::string> batch_items;
    std::vector<std::string> report_files;
    std::string weights_path;

    CLI::App* generate = app.add_subcommand("generate-subtitles",
                                            "transcribe media into an SRT file");
    add_io_flags(generate, state);
    add_asr_flags(generate, state);

    CLI::App* summarize = app.add_subcommand("summarize",
                                             "summarize a video from its subtitles");
    add_io_flags(summarize, state);
    summarize->add_option("--srt", state.srt, "existing subtitle file");
    add_summary_flags(summarize, state);
    add_asr_flags(summarize, state);

    CLI::App* batch_cmd = app.add_subcommand("batch", "run a corpus of summarize configs");
    add_io_flags(batch_cmd, state);
    add_summary_flags(batch_cmd, state);
    add_asr_flags(batch_cmd, state);
    batch_cmd->add_flag("!--no-seed-first", state.seed_first,
                        "let the first weighted item update instead of seeding");
    batch_cmd->add_option("items", batch_items, "flat key-value config file per video")
        ->required();

    CLI::App* report_cmd = app.add_subcommand("report", "aggregate stored run reports");
    report_cmd->add_option("--config", state.config_path, "flat key-value config file");
    report_cmd->add_option("--out", state.out, "output directory");
    report_cmd->add_option("reports", report_files, "report.kv files from earlier runs")
        ->required();

    CLI::App* weights_cmd = app.add_subcommand("weights", "inspect or reset ensemble weights");
    weights_cmd->require_subcommand(1);
    CLI::App* weights_show = weights_cmd->add_subcommand("show", "print the stored weights");
    weights_show->add_option("--weights", weights_path, "weight state file")->required();
    CLI::App* weights_reset = weights_cmd->add_subcommand("reset", "restore default weights");
    weights_reset->add_option("--weights", weights_path, "weight state file")->required();

    try {
        std::string config = find_config_arg(argc, argv);
        if (!config.empty()) apply_document(state, vsum::kv::Document::load(config));
    } catch (const vsum::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return vsum::exit_code(e.error_class());
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (generate->parsed()) return run_generate(state);
        if (summarize->parsed()) return run_summarize(state);
        if (batch_cmd->parsed()) return run_batch(state, batch_items);
        if (report_cmd->parsed()) return run_report(state, report_files);
        if (weights_show->parsed()) return run_weights_show(weights_path);
        if (weights_reset->parsed()) return run_weights_reset(weights_path);
        return 0;
    } catch (const vsum::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return vsum::exit_code(e.error_class());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
}
