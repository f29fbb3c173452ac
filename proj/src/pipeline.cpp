#include "vsum/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <set>
#include <utility>

#include "vsum/cutplan.hpp"
#include "vsum/errors.hpp"
#include "vsum/kv.hpp"

namespace vsum {

namespace {

// Runs one pipeline stage; any failure resurfaces with the stage name
// so the caller can tell where a run died. The error class survives,
// keeping the exit-code mapping intact.
template <typename F>
auto stage(const char* name, F&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Error& e) {
        throw Error(e.error_class(), std::string(name) + ": " + e.what());
    } catch (const std::exception& e) {
        throw Error(ErrorClass::Internal, std::string(name) + ": " + e.what());
    }
}

// Output files are accumulated here and written together once the whole
// run has succeeded, each write being atomic on its own.
struct StagedOutputs {
    std::vector<std::pair<std::string, std::string>> files;

    void add(RunSummary& summary, const std::string& dir, const std::string& logical,
             const std::string& name, std::string content) {
        std::string path = (std::filesystem::path(dir) / name).string();
        files.emplace_back(path, std::move(content));
        summary.outputs[logical] = path;
    }

    void commit(const std::string& dir) const {
        stage("write-outputs", [&] {
            std::filesystem::create_directories(dir);
            for (const auto& [path, content] : files) kv::write_file_atomic(path, content);
            return 0;
        });
    }
};

SubtitleTrack obtain_track(const RunConfig& cfg, RunSummary& summary) {
    if (!cfg.srt_path.empty()) {
        std::string raw = stage("read-subtitles", [&] { return kv::read_file(cfg.srt_path); });
        return stage("parse-subtitles", [&] { return parse_srt(raw); });
    }
    summary.subtitles_generated = true;
    AudioBuffer audio = stage("read-audio", [&] { return read_wav(cfg.media_path); });
    std::vector<AudioChunk> chunks =
        stage("segment-audio", [&] { return chunk(audio, cfg.segmentation); });
    summary.n_chunks = static_cast<int>(chunks.size());
    std::vector<ChunkTranscription> transcripts = stage(
        "transcribe", [&] { return transcribe_all(chunks, *cfg.backend, cfg.transcribe); });
    for (const auto& t : transcripts)
        if (t.result.failed) ++summary.n_failed_chunks;
    return stage("assemble-subtitles", [&] { return assemble_track(transcripts); });
}

std::string ensemble_csv(const SubtitleTrack& track, const EnsembleResult& ens) {
    std::string csv = "cue_id,selected,score\n";
    for (const auto& cue : track.cues) {
        bool picked = std::binary_search(ens.selected.begin(), ens.selected.end(), cue.id);
        auto score = ens.sentence_scores.find(cue.id);
        csv += std::to_string(cue.id);
        csv += picked ? ",1," : ",0,";
        csv += score == ens.sentence_scores.end() ? "0" : format_double(score->second);
        csv += '\n';
    }
    return csv;
}

std::string report_kv(const EfficiencyReport& report) {
    kv::Document doc;
    doc.set("video_id", report.video_id);
    doc.set("n_combined", std::to_string(report.n_combined));
    for (const auto& [algo, row] : report.per_algorithm) {
        std::string prefix(algorithm_name(algo));
        doc.set(prefix + ".n_selected", std::to_string(row.n_algorithm));
        doc.set(prefix + ".efficiency", format_double(row.efficiency));
    }
    return doc.serialize();
}

std::vector<Algorithm> normalized_algorithms(const RunConfig& cfg) {
    std::vector<Algorithm> algos = cfg.algorithms;
    std::sort(algos.begin(), algos.end());
    return algos;
}

}  // namespace

std::string_view run_mode_name(RunMode mode) {
    switch (mode) {
        case RunMode::Single: return "single";
        case RunMode::Intersect: return "intersect";
        case RunMode::Weighted: return "weighted";
    }
    return "single";
}

std::optional<RunMode> run_mode_from_name(std::string_view name) {
    if (name == "single") return RunMode::Single;
    if (name == "intersect") return RunMode::Intersect;
    if (name == "weighted") return RunMode::Weighted;
    return std::nullopt;
}

std::string RunConfig::resolved_video_id() const {
    if (!video_id.empty()) return video_id;
    const std::string& source = srt_path.empty() ? media_path : srt_path;
    std::string stem = std::filesystem::path(source).stem().string();
    return stem.empty() ? "video" : stem;
}

void RunConfig::validate() const {
    if (output_dir.empty()) throw InvalidConfig("output directory not set");
    if (srt_path.empty()) {
        if (media_path.empty()) throw InvalidConfig("need a subtitle file or source media");
        if (backend == nullptr)
            throw InvalidConfig("subtitle generation needs a recognition backend");
    }
    if (algorithms.empty()) throw InvalidConfig("no algorithms selected");
    std::set<Algorithm> distinct(algorithms.begin(), algorithms.end());
    if (distinct.size() != algorithms.size()) throw InvalidConfig("duplicate algorithm selected");
    if (mode == RunMode::Single && algorithms.size() != 1)
        throw InvalidConfig("single mode takes exactly one algorithm");
    if (mode != RunMode::Single && algorithms.size() < 2)
        throw InvalidConfig("ensemble modes need at least two algorithms");
    if (mode == RunMode::Weighted && weights_path.empty())
        throw InvalidConfig("weighted mode needs a weight state path");
    if (merge_gap_ms < 0) throw InvalidConfig("merge gap must be non-negative");
    int lexicons = int(!bonus_path.empty()) + int(!stigma_path.empty()) + int(!null_path.empty());
    if (lexicons != 0 && lexicons != 3)
        throw InvalidConfig("cue-word lexicons require all three word files");
    segmentation.validate();
}

RunSummary run(const RunConfig& cfg) {
    stage("validate-config", [&] {
        cfg.validate();
        return 0;
    });

    RunSummary summary;
    summary.video_id = cfg.resolved_video_id();
    summary.mode = cfg.mode;

    SubtitleTrack track = obtain_track(cfg, summary);
    summary.n_cues = static_cast<int>(track.cues.size());

    EdmundsonLexicons lexicons;
    bool have_lexicons = !cfg.bonus_path.empty();
    if (have_lexicons)
        lexicons = stage("load-lexicons", [&] {
            return EdmundsonLexicons::load(cfg.bonus_path, cfg.stigma_path, cfg.null_path);
        });

    std::vector<Algorithm> algos = normalized_algorithms(cfg);
    std::vector<SummaryResult> results = stage("summarize", [&] {
        std::vector<SummaryResult> out;
        for (Algorithm a : algos) {
            SummaryConfig scfg = cfg.summary;
            auto override = cfg.p_overrides.find(a);
            if (override != cfg.p_overrides.end()) scfg.p_select = override->second;
            out.push_back(summarize(a, track, scfg, have_lexicons ? &lexicons : nullptr));
        }
        return out;
    });
    for (const auto& r : results)
        summary.per_algorithm_selected[r.algorithm] = static_cast<int>(r.selected.size());

    StagedOutputs staged;
    staged.add(summary, cfg.output_dir, "subtitles", "subtitles.srt", serialize_srt(track));
    for (const auto& r : results) {
        std::string name(algorithm_name(r.algorithm));
        staged.add(summary, cfg.output_dir, name + "_csv", name + "_selection.csv",
                   selection_profile_csv(track, r));
    }

    // Everything from the ensemble decision to the staged file commit;
    // in weighted mode it runs under the weight-file lock so the vote,
    // the learning step and the outputs can never interleave with a
    // concurrent run.
    AlgorithmRanking ranking;
    auto finish = [&](const EnsembleWeights* weights) {
        if (cfg.mode == RunMode::Single) {
            summary.selected = results.front().selected;
        } else {
            EnsembleResult ens = stage("combine", [&] {
                if (cfg.mode == RunMode::Intersect) return intersect(results);
                int p = cfg.summary.p_select.resolve(summary.n_cues);
                return weighted_select(results, *weights, p);
            });
            summary.selected = ens.selected;
            staged.add(summary, cfg.output_dir, "ensemble_csv", "ensemble_selection.csv",
                       ensemble_csv(track, ens));
            summary.report = stage("report", [&] {
                return build_report(summary.video_id, results, ens);
            });
            summary.has_report = true;
            staged.add(summary, cfg.output_dir, "report", "report.kv", report_kv(summary.report));
            if (cfg.mode == RunMode::Weighted) {
                ranking = stage("rank", [&] { return rank_algorithms(results, ens); });
                summary.ranking = ranking.order;
            }
        }

        stage("cut-plan", [&] {
            CutList cutlist =
                build_cutlist(track, summary.selected, cfg.merge_gap_ms, cfg.media_path);
            SubtitleTrack retimed = retime_track(track, cutlist);
            staged.add(summary, cfg.output_dir, "cutlist", "cutlist.json", cutlist_json(cutlist));
            staged.add(summary, cfg.output_dir, "script", "cut.sh",
                       render_cut_script(cutlist, cfg.cut_tool));
            staged.add(summary, cfg.output_dir, "summary_srt", "summary.srt",
                       serialize_srt(retimed));
            return 0;
        });

        staged.commit(cfg.output_dir);
    };

    if (cfg.mode == RunMode::Weighted) {
        stage("weights", [&] {
            update_state_file(cfg.weights_path, [&](EnsembleWeights current) {
                current.validate();
                finish(&current);
                if (!cfg.update_weights_after_run || ranking.reference_empty) return current;
                EnsembleWeights next = update_weights(current, ranking.order);
                summary.weights_updated = true;
                return next;
            });
            return 0;
        });
        summary.outputs["weights"] = cfg.weights_path;
    } else {
        finish(nullptr);
    }

    return summary;
}

RunSummary generate_subtitles(const RunConfig& cfg) {
    stage("validate-config", [&] {
        if (cfg.output_dir.empty()) throw InvalidConfig("output directory not set");
        if (cfg.media_path.empty()) throw InvalidConfig("need source media");
        if (cfg.backend == nullptr)
            throw InvalidConfig("subtitle generation needs a recognition backend");
        cfg.segmentation.validate();
        return 0;
    });

    RunSummary summary;
    summary.video_id = cfg.resolved_video_id();
    summary.mode = cfg.mode;

    RunConfig generation = cfg;
    generation.srt_path.clear();
    SubtitleTrack track = obtain_track(generation, summary);
    summary.n_cues = static_cast<int>(track.cues.size());

    StagedOutputs staged;
    staged.add(summary, cfg.output_dir, "subtitles", "subtitles.srt", serialize_srt(track));
    staged.commit(cfg.output_dir);
    return summary;
}

BatchResult batch(const std::vector<RunConfig>& corpus, const BatchOptions& options) {
    if (corpus.empty()) throw EmptyCorpus("batch needs at least one run");

    BatchResult result;
    std::vector<EfficiencyReport> rows;
    bool first_weighted_seen = false;
    for (size_t i = 0; i < corpus.size(); ++i) {
        RunConfig cfg = corpus[i];
        if (cfg.mode == RunMode::Weighted && options.seed_first && !first_weighted_seen) {
            cfg.update_weights_after_run = false;
            first_weighted_seen = true;
        }
        try {
            RunSummary summary = run(cfg);
            if (summary.has_report) rows.push_back(summary.report);
            result.runs.push_back(std::move(summary));
        } catch (const Error& e) {
            result.failures.push_back(
                {i, cfg.resolved_video_id(), e.what(), e.error_class()});
        }
    }
    result.corpus = corpus_report(rows);
    return result;
}

}  // namespace vsum
