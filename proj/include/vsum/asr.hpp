#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vsum/audioseg.hpp"
#include "vsum/srt.hpp"

namespace vsum {

struct TranscriptionRequest {
    const AudioChunk* chunk = nullptr;
    std::optional<std::string> language_hint;
};

struct TranscriptionResult {
    std::string text;  // trimmed; empty when nothing was recognized
    std::optional<double> confidence;
    bool failed = false;  // backend gave up after retries
};

// Shared across concurrent requests; implementations must be
// thread-safe. AuthError aborts a batch; any other recognizer error is
// treated as transient and retried.
class RecognizerBackend {
public:
    virtual ~RecognizerBackend() = default;
    virtual TranscriptionResult transcribe(const TranscriptionRequest& request) = 0;
};

// Deterministic fixture backend: padded chunk bytes are hashed and the
// hash looked up in a canned key-value map (see fixture_key). Unmapped
// chunks transcribe to empty text. Two magic texts drive failure
// injection in tests: "!AUTH" raises AuthError, "!FAIL" raises
// BackendUnreachable on every attempt.
class OfflineStub : public RecognizerBackend {
public:
    static OfflineStub from_file(const std::string& path);
    explicit OfflineStub(std::map<std::string, std::string> fixtures);

    TranscriptionResult transcribe(const TranscriptionRequest& request) override;

    // FNV-1a 64 over sample rate (4 bytes LE) then each padded sample
    // (2 bytes LE), as 16 hex digits.
    static std::string fixture_key(const AudioChunk& chunk);

private:
    std::map<std::string, std::string> fixtures_;
};

// POSTs the padded chunk as WAV with a bearer token and reads the
// `text` field of the JSON response.
class RemoteHttp : public RecognizerBackend {
public:
    struct Options {
        std::string base_url;              // e.g. http://host:port
        std::string path = "/transcribe";
        std::string token_env = "VSUM_ASR_TOKEN";
        int timeout_seconds = 30;
    };

    explicit RemoteHttp(Options options);
    TranscriptionResult transcribe(const TranscriptionRequest& request) override;

private:
    Options options_;
    std::string token_;
};

struct TranscribeOptions {
    int parallelism = 2;
    int attempts = 3;             // total tries per chunk
    int backoff_initial_ms = 100; // doubles per retry
    int backoff_cap_ms = 2000;
};

struct ChunkTranscription {
    AudioChunk chunk;
    TranscriptionResult result;
};

// Bounded-parallel transcription; results come back in chunk order. A
// chunk that keeps failing yields empty text with failed=true instead
// of sinking the batch. AuthError propagates immediately.
std::vector<ChunkTranscription> transcribe_all(const std::vector<AudioChunk>& chunks,
                                               RecognizerBackend& backend,
                                               const TranscribeOptions& options = {});

// One cue per non-empty transcription, timestamps on the original
// media timeline, ids 1..n. Throws NoSpeechRecognized when every
// transcription came back empty.
SubtitleTrack assemble_track(const std::vector<ChunkTranscription>& results);

}  // namespace vsum
