#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vsum {

// Mono 16-bit PCM. Stereo sources are downmixed on read.
struct AudioBuffer {
    std::vector<std::int16_t> samples;
    int sample_rate = 16000;

    static constexpr std::int16_t kFullScale = 32767;

    std::int64_t duration_ms() const {
        return static_cast<std::int64_t>(samples.size()) * 1000 / sample_rate;
    }

    void validate() const;  // supported rate, at least one sample
};

bool is_supported_rate(int sample_rate);

// RIFF/WAVE, PCM 16-bit little-endian, mono or stereo (averaged to
// mono). Unknown chunks are skipped.
AudioBuffer parse_wav(const std::string& bytes);
AudioBuffer read_wav(const std::string& path);

// Canonical 44-byte-header mono PCM16 WAV.
std::string wav_bytes(const AudioBuffer& audio);
void write_wav(const std::string& path, const AudioBuffer& audio);

}  // namespace vsum
