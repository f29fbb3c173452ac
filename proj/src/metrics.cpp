#include "vsum/metrics.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>

#include "vsum/errors.hpp"

namespace vsum {

namespace {

std::string percent_text(double percent) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", percent);
    return buf;
}

}  // namespace

std::string format_double(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc())
        throw Error(ErrorClass::Internal, "number formatting failed");
    return std::string(buf, ptr);
}

double efficiency(int n_combined, int n_algorithm) {
    if (n_algorithm < 1) throw UndefinedEfficiency("efficiency undefined for an empty selection");
    if (n_combined < 0) throw InvalidConfig("negative ensemble size");
    return static_cast<double>(n_combined) / n_algorithm;
}

EfficiencyReport build_report(const std::string& video_id,
                              const std::vector<SummaryResult>& results,
                              const EnsembleResult& ensemble) {
    EfficiencyReport report;
    report.video_id = video_id;
    report.n_combined = static_cast<int>(ensemble.selected.size());
    for (const auto& r : results) {
        EfficiencyReport::PerAlgorithm entry;
        entry.n_algorithm = static_cast<int>(r.selected.size());
        entry.efficiency = efficiency(report.n_combined, entry.n_algorithm);
        if (ensemble.method == EnsembleMethod::Intersection && entry.efficiency > 1.0)
            throw Error(ErrorClass::Internal,
                        "intersection larger than a member selection; inputs inconsistent");
        report.per_algorithm[r.algorithm] = entry;
    }
    return report;
}

CorpusReport corpus_report(const std::vector<EfficiencyReport>& reports) {
    if (reports.empty()) throw EmptyCorpus("corpus report needs at least one video");

    CorpusReport out;
    out.rows = reports;
    std::sort(out.rows.begin(), out.rows.end(),
              [](const EfficiencyReport& a, const EfficiencyReport& b) {
                  return a.video_id < b.video_id;
              });

    std::map<Algorithm, double> sum;
    std::map<Algorithm, int> count;
    for (const auto& row : out.rows)
        for (const auto& [algo, entry] : row.per_algorithm) {
            sum[algo] += entry.efficiency;
            count[algo] += 1;
        }
    for (const auto& [algo, total] : sum) {
        out.mean_ratio[algo] = total / count[algo];
        out.mean_percent[algo] = out.mean_ratio[algo] * 100.0;
    }
    return out;
}

std::string selection_profile_csv(const SubtitleTrack& track, const SummaryResult& result) {
    if (result.scores.size() != track.size())
        throw MismatchedTracks("result does not cover the track");
    for (size_t i = 0; i < track.size(); ++i)
        if (result.scores[i].cue_id != track.cues[i].id)
            throw MismatchedTracks("result cue ids do not match the track");

    std::string csv = "cue_id,selected,score\n";
    size_t next_selected = 0;
    for (const auto& s : result.scores) {
        bool selected = next_selected < result.selected.size() &&
                        result.selected[next_selected] == s.cue_id;
        if (selected) ++next_selected;
        csv += std::to_string(s.cue_id);
        csv += selected ? ",1," : ",0,";
        csv += format_double(s.score);
        csv += '\n';
    }
    return csv;
}

std::string render_corpus_table(const CorpusReport& report) {
    // rows in enum order; only algorithms that actually appear
    std::vector<std::array<std::string, 3>> cells;
    cells.push_back({"algorithm", "mean_efficiency", "percent"});
    for (Algorithm a : kAllAlgorithms) {
        auto it = report.mean_ratio.find(a);
        if (it == report.mean_ratio.end()) continue;
        cells.push_back({std::string(algorithm_name(a)), format_double(it->second),
                         percent_text(report.mean_percent.at(a))});
    }

    size_t width[3] = {0, 0, 0};
    for (const auto& row : cells)
        for (int c = 0; c < 3; ++c) width[c] = std::max(width[c], row[c].size());

    std::string text = "videos: " + std::to_string(report.rows.size()) + "\n";
    for (const auto& row : cells) {
        for (int c = 0; c < 3; ++c) {
            text += row[c];
            if (c < 2) text.append(width[c] - row[c].size() + 2, ' ');
        }
        text += '\n';
    }
    return text;
}

std::string render_corpus_kv(const CorpusReport& report) {
    std::string text = "videos = " + std::to_string(report.rows.size()) + "\n";
    for (Algorithm a : kAllAlgorithms) {
        auto it = report.mean_ratio.find(a);
        if (it == report.mean_ratio.end()) continue;
        std::string name(algorithm_name(a));
        text += name + ".mean_efficiency = " + format_double(it->second) + "\n";
        text += name + ".percent = " + percent_text(report.mean_percent.at(a)) + "\n";
    }
    return text;
}

}  // namespace vsum
