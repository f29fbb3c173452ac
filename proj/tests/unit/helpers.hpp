#pragma once

#include <string>
#include <vector>

#include "vsum/srt.hpp"

// Builds a valid track from bare sentence texts, ids 1..n.
inline vsum::SubtitleTrack make_track(const std::vector<std::string>& texts) {
    vsum::SubtitleTrack track;
    for (size_t i = 0; i < texts.size(); ++i) {
        vsum::SubtitleCue cue;
        cue.id = static_cast<int>(i) + 1;
        cue.start = vsum::Timecode{static_cast<std::int64_t>(i) * 2000};
        cue.end = vsum::Timecode{static_cast<std::int64_t>(i) * 2000 + 1500};
        cue.text = texts[i];
        track.cues.push_back(cue);
    }
    return track;
}
