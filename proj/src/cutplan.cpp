#include "vsum/cutplan.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "vsum/errors.hpp"

namespace vsum {

namespace {

// "SS.mmm" seconds text for the media tool command line.
std::string seconds_text(std::int64_t ms) {
    std::string frac = std::to_string(ms % 1000);
    frac.insert(0, 3 - frac.size(), '0');
    return std::to_string(ms / 1000) + "." + frac;
}

std::string segment_name(size_t index) {
    std::string n = std::to_string(index);
    n.insert(0, 3 - std::min<size_t>(3, n.size()), '0');
    return "vsum_seg_" + n + ".mp4";
}

}  // namespace

std::int64_t CutList::total_duration_ms() const {
    std::int64_t total = 0;
    for (const Segment& s : segments) total += s.end_ms - s.start_ms;
    return total;
}

void CutList::validate() const {
    for (size_t i = 0; i < segments.size(); ++i) {
        if (segments[i].start_ms >= segments[i].end_ms)
            throw Error(ErrorClass::Internal, "cut segment with non-positive length");
        if (i > 0 && segments[i].start_ms < segments[i - 1].end_ms)
            throw Error(ErrorClass::Internal, "cut segments overlap or are unordered");
    }
}

CutList build_cutlist(const SubtitleTrack& track, const std::vector<int>& selected_ids,
                      std::int64_t merge_gap_ms, const std::string& source) {
    if (selected_ids.empty()) throw EmptySelection("no cues selected, nothing to cut");
    if (merge_gap_ms < 0) throw InvalidConfig("merge gap must be non-negative");

    std::set<int> wanted(selected_ids.begin(), selected_ids.end());
    CutList cut;
    cut.source = source;
    cut.merge_gap_ms = merge_gap_ms;

    for (const SubtitleCue& cue : track.cues) {
        if (!wanted.count(cue.id)) continue;
        wanted.erase(cue.id);
        Segment span{cue.start.millis, cue.end.millis};
        if (!cut.segments.empty()) {
            Segment& last = cut.segments.back();
            if (span.start_ms - last.end_ms < merge_gap_ms) {
                last.end_ms = std::max(last.end_ms, span.end_ms);
                continue;
            }
        }
        cut.segments.push_back(span);
    }
    if (!wanted.empty())
        throw InvalidConfig("selected cue id " + std::to_string(*wanted.begin()) +
                            " is not in the track");
    cut.validate();
    return cut;
}

SubtitleTrack retime_track(const SubtitleTrack& track, const CutList& cutlist) {
    cutlist.validate();
    const auto& segs = cutlist.segments;
    // kept_before[k]: summarized-timeline position where segment k starts
    std::vector<std::int64_t> kept_before(segs.size() + 1, 0);
    for (size_t k = 0; k < segs.size(); ++k)
        kept_before[k + 1] = kept_before[k] + (segs[k].end_ms - segs[k].start_ms);

    SubtitleTrack out;
    for (const SubtitleCue& cue : track.cues) {
        // the only segment that can contain the cue is the first one
        // ending at or after the cue's end
        auto it = std::lower_bound(segs.begin(), segs.end(), cue.end.millis,
                                   [](const Segment& s, std::int64_t end) {
                                       return s.end_ms < end;
                                   });
        if (it == segs.end() || cue.start.millis < it->start_ms || cue.end.millis > it->end_ms)
            continue;
        size_t k = static_cast<size_t>(it - segs.begin());
        std::int64_t shift = it->start_ms - kept_before[k];
        SubtitleCue shifted = cue;
        shifted.id = static_cast<int>(out.cues.size()) + 1;
        shifted.start = Timecode{cue.start.millis - shift};
        shifted.end = Timecode{cue.end.millis - shift};
        out.cues.push_back(std::move(shifted));
    }
    return out;
}

std::string render_cut_script(const CutList& cutlist, const std::string& default_tool) {
    cutlist.validate();
    std::string src = cutlist.source.empty() ? "source.mp4" : cutlist.source;

    std::string s;
    s += "#!/bin/sh\n";
    s += "# Cuts the kept segments out of the source and concatenates them\n";
    s += "# into the summarized video. Segments are re-encoded so cuts are\n";
    s += "# frame-accurate rather than snapped to keyframes.\n";
    s += "set -eu\n";
    s += "TOOL=\"${TOOL:-" + default_tool + "}\"\n";
    s += "SRC=\"${SRC:-" + src + "}\"\n";
    s += "OUT=\"${OUT:-summary.mp4}\"\n\n";

    s += ": > vsum_concat.txt\n";
    for (size_t i = 0; i < cutlist.segments.size(); ++i) {
        const Segment& seg = cutlist.segments[i];
        s += "\"$TOOL\" -y -ss " + seconds_text(seg.start_ms) + " -to " +
             seconds_text(seg.end_ms) + " -i \"$SRC\" " + segment_name(i) + "\n";
        s += "printf \"file '%s'\\n\" " + segment_name(i) + " >> vsum_concat.txt\n";
    }
    s += "\n\"$TOOL\" -y -f concat -safe 0 -i vsum_concat.txt -c copy \"$OUT\"\n";
    return s;
}

std::string cutlist_json(const CutList& cutlist) {
    std::string j = "[";
    for (size_t i = 0; i < cutlist.segments.size(); ++i) {
        if (i) j += ",";
        j += "{\"start_ms\":" + std::to_string(cutlist.segments[i].start_ms) +
             ",\"end_ms\":" + std::to_string(cutlist.segments[i].end_ms) + "}";
    }
    j += "]\n";
    return j;
}

}  // namespace vsum
