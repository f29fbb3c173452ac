#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vsum {

// Milliseconds since video start. Serializes as `HH:MM:SS,mmm` (comma
// decimal separator, always 12 characters). Valid below 100 hours.
struct Timecode {
    std::int64_t millis = 0;

    static constexpr std::int64_t kMaxMillis = 360000000;  // 100 h

    static Timecode parse(std::string_view text);
    std::string to_string() const;

    auto operator<=>(const Timecode&) const = default;
};

struct SubtitleCue {
    int id = 0;          // positive, strictly increasing within a track
    Timecode start;
    Timecode end;        // start < end
    std::string text;    // one caption line, non-empty after trimming
};

struct SubtitleTrack {
    std::vector<SubtitleCue> cues;

    bool empty() const { return cues.empty(); }
    size_t size() const { return cues.size(); }

    const SubtitleCue* find(int cue_id) const;

    // Throws if ids are not strictly increasing, starts decrease, any
    // cue has start >= end, or any cue text is blank.
    void validate() const;
};

// Parses SubRip text. Tolerates a UTF-8 BOM, CRLF line endings and runs
// of blank lines between records; multi-line cue text is joined with a
// single space. Enforces the track invariants.
SubtitleTrack parse_srt(std::string_view raw);

// Canonical SRT: id line, `start --> end` line, one text line, blank
// line after every record (including the last). LF endings only.
// parse_srt(serialize_srt(t)) reproduces t exactly.
std::string serialize_srt(const SubtitleTrack& track);

struct RenumberResult {
    SubtitleTrack track;
    std::vector<int> original_ids;  // original_ids[i] is the source id of cue i+1
};

// Rewrites ids 1..n preserving order, times and text.
RenumberResult renumber(const SubtitleTrack& track);

}  // namespace vsum
