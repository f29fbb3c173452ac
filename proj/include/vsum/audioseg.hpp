#pragma once

#include <cstdint>
#include <vector>

#include "vsum/audio.hpp"

namespace vsum {

struct SegmentationConfig {
    std::int64_t max_interval_ms = 6000;  // hard cap per chunk
    double silence_threshold = 0.01;      // RMS fraction of full scale
    std::int64_t min_silence_ms = 300;
    std::int64_t frame_ms = 20;

    void validate() const;
};

struct SilenceSpan {
    std::int64_t start_ms = 0;
    std::int64_t end_ms = 0;
};

// Speech chunk on the source timeline. padded holds the core samples
// with one second of zeros on each side, ready for recognition.
struct AudioChunk {
    std::int64_t start_ms = 0;
    std::int64_t end_ms = 0;
    AudioBuffer padded;
};

// Maximal runs of consecutive low-RMS frames lasting at least
// min_silence_ms. No silence found yields an empty list.
std::vector<SilenceSpan> detect_silences(const AudioBuffer& audio, const SegmentationConfig& cfg);

// Greedy left-to-right split: a chunk ends at the first qualifying
// silence after its start, or is cut hard at max_interval_ms. Silences
// are skipped entirely. All-silence input yields an empty list.
std::vector<AudioChunk> chunk(const AudioBuffer& audio, const SegmentationConfig& cfg);

}  // namespace vsum
