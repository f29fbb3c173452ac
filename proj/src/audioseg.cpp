#include "vsum/audioseg.hpp"

#include <cmath>

#include "vsum/errors.hpp"

namespace vsum {

namespace {

// Sample-index silence run; all segmentation math stays in samples so
// rates like 22050 Hz never hit fractional milliseconds internally.
struct SampleRun {
    std::int64_t begin = 0;
    std::int64_t end = 0;
};

std::vector<SampleRun> silence_runs(const AudioBuffer& audio, const SegmentationConfig& cfg) {
    const std::int64_t total = static_cast<std::int64_t>(audio.samples.size());
    const std::int64_t frame = cfg.frame_ms * audio.sample_rate / 1000;
    const std::int64_t min_run = cfg.min_silence_ms * audio.sample_rate / 1000;
    const double threshold = cfg.silence_threshold * 32768.0;

    std::vector<SampleRun> runs;
    std::int64_t run_begin = -1;
    for (std::int64_t pos = 0; pos < total; pos += frame) {
        std::int64_t len = std::min(frame, total - pos);
        double sum_sq = 0.0;
        for (std::int64_t i = pos; i < pos + len; ++i) {
            double s = audio.samples[static_cast<size_t>(i)];
            sum_sq += s * s;
        }
        bool silent = std::sqrt(sum_sq / static_cast<double>(len)) < threshold;
        if (silent && run_begin < 0) run_begin = pos;
        if (!silent && run_begin >= 0) {
            if (pos - run_begin >= min_run) runs.push_back({run_begin, pos});
            run_begin = -1;
        }
    }
    if (run_begin >= 0 && total - run_begin >= min_run) runs.push_back({run_begin, total});
    return runs;
}

std::int64_t to_ms(std::int64_t sample, int rate) { return sample * 1000 / rate; }

}  // namespace

void SegmentationConfig::validate() const {
    if (max_interval_ms <= 0 || min_silence_ms <= 0 || frame_ms <= 0)
        throw InvalidConfig("segmentation intervals must be positive");
    if (!(silence_threshold > 0.0) || silence_threshold >= 1.0)
        throw InvalidConfig("silence threshold must be in (0,1)");
    if (min_silence_ms > max_interval_ms)
        throw InvalidConfig("min_silence_ms must not exceed max_interval_ms");
}

std::vector<SilenceSpan> detect_silences(const AudioBuffer& audio, const SegmentationConfig& cfg) {
    audio.validate();
    cfg.validate();
    std::vector<SilenceSpan> spans;
    for (const SampleRun& r : silence_runs(audio, cfg))
        spans.push_back({to_ms(r.begin, audio.sample_rate), to_ms(r.end, audio.sample_rate)});
    return spans;
}

std::vector<AudioChunk> chunk(const AudioBuffer& audio, const SegmentationConfig& cfg) {
    audio.validate();
    cfg.validate();
    const std::int64_t total = static_cast<std::int64_t>(audio.samples.size());
    const std::int64_t max_len = cfg.max_interval_ms * audio.sample_rate / 1000;
    const std::int64_t pad = audio.sample_rate;  // one second per side
    std::vector<SampleRun> silences = silence_runs(audio, cfg);

    std::vector<AudioChunk> chunks;
    std::int64_t pos = 0;
    size_t next_silence = 0;
    while (pos < total) {
        // skip silence covering the current position
        if (next_silence < silences.size() && silences[next_silence].begin <= pos) {
            pos = std::max(pos, silences[next_silence].end);
            ++next_silence;
            continue;
        }
        std::int64_t cut;
        if (next_silence < silences.size() && silences[next_silence].begin - pos <= max_len) {
            cut = silences[next_silence].begin;  // ends where the silence starts
        } else {
            cut = std::min(pos + max_len, total);  // hard cut (or end of input)
        }

        AudioChunk c;
        c.start_ms = to_ms(pos, audio.sample_rate);
        c.end_ms = to_ms(cut, audio.sample_rate);
        c.padded.sample_rate = audio.sample_rate;
        c.padded.samples.assign(static_cast<size_t>(pad), 0);
        c.padded.samples.insert(c.padded.samples.end(),
                                audio.samples.begin() + static_cast<std::ptrdiff_t>(pos),
                                audio.samples.begin() + static_cast<std::ptrdiff_t>(cut));
        c.padded.samples.insert(c.padded.samples.end(), static_cast<size_t>(pad), 0);
        chunks.push_back(std::move(c));
        pos = cut;
    }
    return chunks;
}

}  // namespace vsum
