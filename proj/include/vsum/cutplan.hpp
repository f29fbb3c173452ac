#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vsum/srt.hpp"

namespace vsum {

struct Segment {
    std::int64_t start_ms = 0;
    std::int64_t end_ms = 0;
};

// Ordered, non-overlapping source-timeline segments to keep.
struct CutList {
    std::vector<Segment> segments;
    std::string source;
    std::int64_t merge_gap_ms = 500;

    std::int64_t total_duration_ms() const;
    void validate() const;
};

// Spans of the selected cues, merged wherever the gap between two
// consecutive spans is below merge_gap_ms.
CutList build_cutlist(const SubtitleTrack& track, const std::vector<int>& selected_ids,
                      std::int64_t merge_gap_ms = 500, const std::string& source = "");

// Cues lying fully inside a kept segment, shifted left by the material
// removed before them and renumbered 1..n.
SubtitleTrack retime_track(const SubtitleTrack& track, const CutList& cutlist);

// POSIX shell script that extracts each segment (segment-accurate
// re-encode) and concatenates them. The media tool is overridable via
// $TOOL at run time; file names inside the script are relative, so the
// text is byte-identical wherever it lands.
std::string render_cut_script(const CutList& cutlist, const std::string& default_tool = "ffmpeg");

// `[{"start_ms":0,"end_ms":4000},...]` with keys in that order.
std::string cutlist_json(const CutList& cutlist);

}  // namespace vsum
