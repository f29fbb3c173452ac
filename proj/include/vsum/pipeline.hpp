#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vsum/asr.hpp"
#include "vsum/audioseg.hpp"
#include "vsum/ensemble.hpp"
#include "vsum/errors.hpp"
#include "vsum/metrics.hpp"
#include "vsum/summarize.hpp"

namespace vsum {

// Single runs exactly one algorithm; the ensemble modes combine the
// configured subset.
enum class RunMode { Single, Intersect, Weighted };

std::string_view run_mode_name(RunMode mode);
std::optional<RunMode> run_mode_from_name(std::string_view name);

struct RunConfig {
    // Source media (16-bit PCM WAV). Needed when no subtitle file is
    // given; otherwise only used as the cut script's default input.
    std::string media_path;
    // Existing subtitles. Empty means generate them from the media.
    std::string srt_path;
    std::string output_dir;
    // Report row id. Defaults to the input file's stem.
    std::string video_id;

    RunMode mode = RunMode::Intersect;
    // The cue-word method is biased by its hand-picked lexicons, so it
    // joins the ensembles only when configured in; its weight slot
    // exists regardless.
    std::vector<Algorithm> algorithms{Algorithm::Luhn, Algorithm::LSA, Algorithm::TextRank,
                                      Algorithm::LexRank};
    SummaryConfig summary;
    // Per-algorithm selection-size overrides; the global p_select in
    // `summary` applies where absent.
    std::map<Algorithm, PSelect> p_overrides;
    SegmentationConfig segmentation;

    // Weight state file, weighted mode only. The learning step can be
    // suppressed so a run only votes with the stored weights.
    std::string weights_path;
    bool update_weights_after_run = true;

    std::int64_t merge_gap_ms = 500;
    std::string cut_tool = "ffmpeg";

    // Cue-word lexicons; either all three or none.
    std::string bonus_path;
    std::string stigma_path;
    std::string null_path;

    // Recognition backend, borrowed. Required when srt_path is empty.
    RecognizerBackend* backend = nullptr;
    TranscribeOptions transcribe;

    std::string resolved_video_id() const;
    void validate() const;
};

struct RunSummary {
    std::string video_id;
    RunMode mode = RunMode::Intersect;

    bool subtitles_generated = false;
    int n_chunks = 0;
    int n_failed_chunks = 0;

    int n_cues = 0;
    std::vector<int> selected;                    // final cue ids, ascending
    std::map<Algorithm, int> per_algorithm_selected;

    bool has_report = false;
    EfficiencyReport report;

    std::vector<Algorithm> ranking;               // weighted mode, best first
    bool weights_updated = false;

    std::map<std::string, std::string> outputs;   // logical name -> path
};

// Full pipeline: obtain subtitles, summarize, combine, measure, plan
// the cut. All file writes happen together at the end, each atomic, so
// a failed run leaves nothing behind in the output directory. Errors
// carry the failing stage's name in the message.
RunSummary run(const RunConfig& cfg);

// Subtitle generation alone: segment, transcribe, assemble, write the
// SRT. The summarization fields of the config are ignored.
RunSummary generate_subtitles(const RunConfig& cfg);

struct BatchOptions {
    // First weighted item establishes the weight file without learning;
    // switching this off makes every item update.
    bool seed_first = true;
};

struct BatchItemFailure {
    size_t index = 0;
    std::string video_id;
    std::string message;
    ErrorClass error_class = ErrorClass::Internal;
};

struct BatchResult {
    CorpusReport corpus;
    std::vector<RunSummary> runs;
    std::vector<BatchItemFailure> failures;
};

// Runs every config in input order; weighted weights therefore evolve
// sequentially across the corpus. A failed item is recorded and the
// batch moves on. Only ensemble-mode runs contribute report rows.
BatchResult batch(const std::vector<RunConfig>& corpus, const BatchOptions& options = {});

}  // namespace vsum
