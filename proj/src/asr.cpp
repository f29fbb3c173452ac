#include "vsum/asr.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "vsum/audio.hpp"
#include "vsum/errors.hpp"
#include "vsum/kv.hpp"

namespace vsum {

namespace {

std::string trimmed(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

OfflineStub::OfflineStub(std::map<std::string, std::string> fixtures)
    : fixtures_(std::move(fixtures)) {}

OfflineStub OfflineStub::from_file(const std::string& path) {
    kv::Document doc = kv::Document::parse(kv::read_file(path));
    std::map<std::string, std::string> fixtures;
    for (const auto& key : doc.keys()) fixtures[key] = doc.get(key);
    return OfflineStub(std::move(fixtures));
}

std::string OfflineStub::fixture_key(const AudioChunk& chunk) {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](unsigned char byte) {
        h ^= byte;
        h *= 1099511628211ull;
    };
    std::uint32_t rate = static_cast<std::uint32_t>(chunk.padded.sample_rate);
    for (int i = 0; i < 4; ++i) mix(static_cast<unsigned char>(rate >> 8 * i & 0xff));
    for (std::int16_t s : chunk.padded.samples) {
        std::uint16_t u = static_cast<std::uint16_t>(s);
        mix(static_cast<unsigned char>(u & 0xff));
        mix(static_cast<unsigned char>(u >> 8));
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

TranscriptionResult OfflineStub::transcribe(const TranscriptionRequest& request) {
    if (!request.chunk) throw Error(ErrorClass::Internal, "transcription request without chunk");
    auto it = fixtures_.find(fixture_key(*request.chunk));
    if (it == fixtures_.end()) return {};
    if (it->second == "!AUTH") throw AuthError("stub rejected credentials");
    if (it->second == "!FAIL") throw BackendUnreachable("stub marked unreachable");
    TranscriptionResult r;
    r.text = trimmed(it->second);
    r.confidence = 1.0;
    return r;
}

RemoteHttp::RemoteHttp(Options options) : options_(std::move(options)) {
    const char* token = std::getenv(options_.token_env.c_str());
    if (!token || !*token)
        throw AuthError("recognizer token missing: set " + options_.token_env);
    token_ = token;
}

TranscriptionResult RemoteHttp::transcribe(const TranscriptionRequest& request) {
    if (!request.chunk) throw Error(ErrorClass::Internal, "transcription request without chunk");
    httplib::Client client(options_.base_url);
    client.set_connection_timeout(options_.timeout_seconds);
    client.set_read_timeout(options_.timeout_seconds);

    httplib::Headers headers = {{"Authorization", "Bearer " + token_}};
    if (request.language_hint) headers.insert({"Accept-Language", *request.language_hint});
    auto res = client.Post(options_.path, headers, wav_bytes(request.chunk->padded), "audio/wav");

    if (!res) throw BackendUnreachable("no response from " + options_.base_url);
    if (res->status == 401 || res->status == 403)
        throw AuthError("recognizer rejected credentials (HTTP " + std::to_string(res->status) + ")");
    if (res->status != 200)
        throw BackendUnreachable("recognizer HTTP " + std::to_string(res->status));

    nlohmann::json body = nlohmann::json::parse(res->body, nullptr, false);
    if (body.is_discarded() || !body.contains("text") || !body["text"].is_string())
        throw BackendUnreachable("recognizer response lacks a text field");

    TranscriptionResult r;
    r.text = trimmed(body["text"].get<std::string>());
    if (body.contains("confidence") && body["confidence"].is_number())
        r.confidence = body["confidence"].get<double>();
    return r;
}

std::vector<ChunkTranscription> transcribe_all(const std::vector<AudioChunk>& chunks,
                                               RecognizerBackend& backend,
                                               const TranscribeOptions& options) {
    if (options.parallelism < 1 || options.attempts < 1)
        throw InvalidConfig("parallelism and attempts must be >= 1");

    std::vector<ChunkTranscription> out(chunks.size());
    for (size_t i = 0; i < chunks.size(); ++i) out[i].chunk = chunks[i];

    std::atomic<size_t> next{0};
    std::atomic<bool> abort{false};
    std::exception_ptr auth_failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= chunks.size() || abort.load()) return;
            TranscriptionRequest request;
            request.chunk = &chunks[i];
            int delay = options.backoff_initial_ms;
            for (int attempt = 1; attempt <= options.attempts; ++attempt) {
                try {
                    out[i].result = backend.transcribe(request);
                    break;
                } catch (const AuthError&) {
                    std::lock_guard<std::mutex> hold(failure_mutex);
                    if (!auth_failure) auth_failure = std::current_exception();
                    abort.store(true);
                    return;
                } catch (const Error&) {
                    if (attempt == options.attempts) {
                        out[i].result = TranscriptionResult{"", std::nullopt, true};
                        break;
                    }
                    std::this_thread::sleep_for(std::chrono::milliseconds(delay));
                    delay = std::min(delay * 2, options.backoff_cap_ms);
                }
            }
        }
    };

    size_t n_workers = std::min(static_cast<size_t>(options.parallelism), chunks.size());
    std::vector<std::thread> pool;
    for (size_t w = 0; w < n_workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    if (auth_failure) std::rethrow_exception(auth_failure);
    return out;
}

SubtitleTrack assemble_track(const std::vector<ChunkTranscription>& results) {
    SubtitleTrack track;
    for (const auto& r : results) {
        if (r.result.text.empty()) continue;
        SubtitleCue cue;
        cue.id = static_cast<int>(track.cues.size()) + 1;
        cue.start = Timecode{r.chunk.start_ms};
        cue.end = Timecode{r.chunk.end_ms};
        cue.text = r.result.text;
        for (char& c : cue.text)
            if (c == '\n' || c == '\r' || c == '\t') c = ' ';
        track.cues.push_back(std::move(cue));
    }
    if (track.empty()) throw NoSpeechRecognized("no chunk produced any text");
    track.validate();
    return track;
}

}  // namespace vsum
