#pragma once

#include <stdexcept>
#include <string>

namespace vsum {

// Error classes map 1:1 onto CLI exit codes.
enum class ErrorClass {
    Input,       // exit 2: bad files, bad config, malformed subtitles
    Asr,         // exit 3: recognition backend failures
    Degenerate,  // exit 4: track carries no usable signal
    Internal,    // exit 5: bugs and broken environment
};

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, const std::string& msg) : std::runtime_error(msg), cls_(cls) {}
    ErrorClass error_class() const { return cls_; }

private:
    ErrorClass cls_;
};

struct MalformedTimecode : Error {
    explicit MalformedTimecode(const std::string& msg) : Error(ErrorClass::Input, msg) {}
};
struct NonMonotonicIds : Error {
    explicit NonMonotonicIds(const std::string& msg) : Error(ErrorClass::Input, msg) {}
};
struct NonMonotonicStarts : Error {
    explicit NonMonotonicStarts(const std::string& msg) : Error(ErrorClass::Input, msg) {}
};
struct OverlapError : Error {
    explicit OverlapError(const std::string& msg) : Error(ErrorClass::Input, msg) {}
};
struct EmptyTrack : Error {
    explicit EmptyTrack(const std::string& msg) : Error(ErrorClass::Input, msg) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(ErrorClass::Input, msg) {}
};
struct UnknownTerm : Error {
    explicit UnknownTerm(const std::string& msg) : Error(ErrorClass::Input, msg) {}
};
struct MissingLexicons : Error {
    explicit MissingLexicons(const std::string& msg) : Error(ErrorClass::Input, msg) {}
};
struct MismatchedTracks : Error {
    explicit MismatchedTracks(const std::string& msg) : Error(ErrorClass::Input, msg) {}
};
struct TooFewAlgorithms : Error {
    explicit TooFewAlgorithms(const std::string& msg) : Error(ErrorClass::Input, msg) {}
};
struct MissingWeight : Error {
    explicit MissingWeight(const std::string& msg) : Error(ErrorClass::Input, msg) {}
};
struct UndefinedEfficiency : Error {
    explicit UndefinedEfficiency(const std::string& msg) : Error(ErrorClass::Input, msg) {}
};
struct EmptyCorpus : Error {
    explicit EmptyCorpus(const std::string& msg) : Error(ErrorClass::Input, msg) {}
};
struct InvalidConfig : Error {
    explicit InvalidConfig(const std::string& msg) : Error(ErrorClass::Input, msg) {}
};
struct EmptySelection : Error {
    explicit EmptySelection(const std::string& msg) : Error(ErrorClass::Degenerate, msg) {}
};
struct DegenerateTrack : Error {
    explicit DegenerateTrack(const std::string& msg) : Error(ErrorClass::Degenerate, msg) {}
};
struct AuthError : Error {
    explicit AuthError(const std::string& msg) : Error(ErrorClass::Asr, msg) {}
};
struct BackendUnreachable : Error {
    explicit BackendUnreachable(const std::string& msg) : Error(ErrorClass::Asr, msg) {}
};
struct NoSpeechRecognized : Error {
    explicit NoSpeechRecognized(const std::string& msg) : Error(ErrorClass::Asr, msg) {}
};
struct IoError : Error {
    explicit IoError(ErrorClass cls, const std::string& msg) : Error(cls, msg) {}
};

inline int exit_code(ErrorClass cls) {
    switch (cls) {
        case ErrorClass::Input: return 2;
        case ErrorClass::Asr: return 3;
        case ErrorClass::Degenerate: return 4;
        case ErrorClass::Internal: return 5;
    }
    return 5;
}

}  // namespace vsum
