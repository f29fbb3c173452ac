#include "vsum/audio.hpp"

#include <cstring>

#include "vsum/errors.hpp"
#include "vsum/kv.hpp"

namespace vsum {

namespace {

std::uint32_t read_u32(const std::string& b, size_t off) {
    return static_cast<std::uint32_t>(static_cast<unsigned char>(b[off])) |
           static_cast<std::uint32_t>(static_cast<unsigned char>(b[off + 1])) << 8 |
           static_cast<std::uint32_t>(static_cast<unsigned char>(b[off + 2])) << 16 |
           static_cast<std::uint32_t>(static_cast<unsigned char>(b[off + 3])) << 24;
}

std::uint16_t read_u16(const std::string& b, size_t off) {
    return static_cast<std::uint16_t>(static_cast<unsigned char>(b[off]) |
                                      static_cast<unsigned char>(b[off + 1]) << 8);
}

void put_u32(std::string& b, std::uint32_t v) {
    b.push_back(static_cast<char>(v & 0xff));
    b.push_back(static_cast<char>(v >> 8 & 0xff));
    b.push_back(static_cast<char>(v >> 16 & 0xff));
    b.push_back(static_cast<char>(v >> 24 & 0xff));
}

void put_u16(std::string& b, std::uint16_t v) {
    b.push_back(static_cast<char>(v & 0xff));
    b.push_back(static_cast<char>(v >> 8 & 0xff));
}

}  // namespace

bool is_supported_rate(int sample_rate) {
    return sample_rate == 8000 || sample_rate == 16000 || sample_rate == 22050 ||
           sample_rate == 44100 || sample_rate == 48000;
}

void AudioBuffer::validate() const {
    if (!is_supported_rate(sample_rate))
        throw InvalidConfig("unsupported sample rate " + std::to_string(sample_rate));
    if (samples.empty()) throw ParseError("audio buffer holds no samples");
}

AudioBuffer parse_wav(const std::string& bytes) {
    if (bytes.size() < 12 || bytes.compare(0, 4, "RIFF") != 0 || bytes.compare(8, 4, "WAVE") != 0)
        throw ParseError("not a RIFF/WAVE file");

    int channels = 0, sample_rate = 0, bits = 0;
    bool have_fmt = false;
    size_t data_off = 0, data_len = 0;

    size_t off = 12;
    while (off + 8 <= bytes.size()) {
        std::string id = bytes.substr(off, 4);
        size_t len = read_u32(bytes, off + 4);
        size_t body = off + 8;
        if (body + len > bytes.size()) throw ParseError("truncated WAV chunk '" + id + "'");
        if (id == "fmt ") {
            if (len < 16) throw ParseError("fmt chunk too short");
            std::uint16_t format = read_u16(bytes, body);
            channels = read_u16(bytes, body + 2);
            sample_rate = static_cast<int>(read_u32(bytes, body + 4));
            bits = read_u16(bytes, body + 14);
            if (format != 1) throw ParseError("only PCM WAV is supported");
            have_fmt = true;
        } else if (id == "data") {
            data_off = body;
            data_len = len;
        }
        off = body + len + (len % 2);  // RIFF pads odd chunks
    }
    if (!have_fmt) throw ParseError("WAV has no fmt chunk");
    if (data_off == 0) throw ParseError("WAV has no data chunk");
    if (bits != 16) throw ParseError("only 16-bit PCM is supported");
    if (channels != 1 && channels != 2)
        throw ParseError("expected mono or stereo, got " + std::to_string(channels) + " channels");

    AudioBuffer audio;
    audio.sample_rate = sample_rate;
    size_t frame_bytes = static_cast<size_t>(channels) * 2;
    size_t frames = data_len / frame_bytes;
    audio.samples.reserve(frames);
    for (size_t f = 0; f < frames; ++f) {
        size_t p = data_off + f * frame_bytes;
        int left = static_cast<std::int16_t>(read_u16(bytes, p));
        if (channels == 1) {
            audio.samples.push_back(static_cast<std::int16_t>(left));
        } else {
            int right = static_cast<std::int16_t>(read_u16(bytes, p + 2));
            audio.samples.push_back(static_cast<std::int16_t>((left + right) / 2));
        }
    }
    audio.validate();
    return audio;
}

AudioBuffer read_wav(const std::string& path) { return parse_wav(kv::read_file(path)); }

std::string wav_bytes(const AudioBuffer& audio) {
    audio.validate();
    std::uint32_t data_len = static_cast<std::uint32_t>(audio.samples.size() * 2);
    std::string b;
    b.reserve(44 + data_len);
    b += "RIFF";
    put_u32(b, 36 + data_len);
    b += "WAVEfmt ";
    put_u32(b, 16);
    put_u16(b, 1);  // PCM
    put_u16(b, 1);  // mono
    put_u32(b, static_cast<std::uint32_t>(audio.sample_rate));
    put_u32(b, static_cast<std::uint32_t>(audio.sample_rate) * 2);
    put_u16(b, 2);   // block align
    put_u16(b, 16);  // bits per sample
    b += "data";
    put_u32(b, data_len);
    for (std::int16_t s : audio.samples)
        put_u16(b, static_cast<std::uint16_t>(s));
    return b;
}

void write_wav(const std::string& path, const AudioBuffer& audio) {
    kv::write_file_atomic(path, wav_bytes(audio));
}

}  // namespace vsum
