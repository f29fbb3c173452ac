#pragma once

#include <map>
#include <string>
#include <vector>

#include "vsum/ensemble.hpp"
#include "vsum/srt.hpp"
#include "vsum/summarize.hpp"

namespace vsum {

// Shortest decimal text that parses back to the same double. Keeps CSV
// and report output bit-stable across runs.
std::string format_double(double value);

// Ratio of ensemble output size to one algorithm's selection size.
double efficiency(int n_combined, int n_algorithm);

struct EfficiencyReport {
    struct PerAlgorithm {
        int n_algorithm = 0;
        double efficiency = 0.0;
    };

    std::string video_id;
    int n_combined = 0;
    std::map<Algorithm, PerAlgorithm> per_algorithm;
};

// One report row per video. With an intersection reference every
// efficiency is <= 1 by construction.
EfficiencyReport build_report(const std::string& video_id,
                              const std::vector<SummaryResult>& results,
                              const EnsembleResult& ensemble);

struct CorpusReport {
    std::vector<EfficiencyReport> rows;          // sorted by video_id
    std::map<Algorithm, double> mean_ratio;      // arithmetic mean per algorithm
    std::map<Algorithm, double> mean_percent;    // mean_ratio * 100
};

// Aggregates per-video rows. Rows are sorted by video_id before
// averaging, so the result does not depend on input order.
CorpusReport corpus_report(const std::vector<EfficiencyReport>& reports);

// `cue_id,selected,score` with one row per cue, LF endings.
std::string selection_profile_csv(const SubtitleTrack& track, const SummaryResult& result);

// Human-readable aligned table: one line per algorithm, mean ratio and
// percent with one decimal.
std::string render_corpus_table(const CorpusReport& report);

// Machine-readable flat key-value rendering of the same numbers.
std::string render_corpus_kv(const CorpusReport& report);

}  // namespace vsum
