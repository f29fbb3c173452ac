#pragma once

#include <map>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "vsum/srt.hpp"

namespace vsum {

class Stopwords {
public:
    // The bundled English list (data/stopwords_en.txt, embedded at build
    // time so the binary needs no resource lookup).
    static const Stopwords& builtin();
    static Stopwords from_file(const std::string& path);
    static Stopwords from_words(std::vector<std::string> words);

    bool contains(std::string_view word) const;
    size_t size() const { return words_.size(); }

private:
    std::unordered_set<std::string> words_;
};

struct Token {
    std::string surface;  // lowercase, no whitespace
    bool is_stopword = false;
};

// Lowercased alphabetic runs; digits and punctuation separate tokens.
std::vector<Token> tokenize(std::string_view text, const Stopwords& stop = Stopwords::builtin());

// Per-cue token lists for the whole track, in cue order.
std::vector<std::vector<Token>> tokenize_track(const SubtitleTrack& track,
                                               const Stopwords& stop = Stopwords::builtin());

// Document-level term statistics over non-stopword tokens. The whole
// track is one document; cues are the "sentences" for df purposes.
struct TermStats {
    std::map<std::string, int> tf;  // occurrences across the track
    std::map<std::string, int> df;  // number of cues containing the term
    int n_sentences = 0;

    bool degenerate() const { return tf.empty(); }
};

TermStats build_stats(const SubtitleTrack& track, const Stopwords& stop = Stopwords::builtin());

// ln(n_sentences / df). Zero for terms present in every cue. Throws
// UnknownTerm for terms the stats never saw.
double idf(const TermStats& stats, const std::string& term);

using SentenceVector = std::map<std::string, double>;

enum class VectorWeighting { Tf, TfIdf };

// One sparse vector per cue over non-stopword terms; zero weights are
// never stored.
std::vector<SentenceVector> sentence_vectors(const SubtitleTrack& track, const TermStats& stats,
                                             VectorWeighting weighting,
                                             const Stopwords& stop = Stopwords::builtin());

double cosine(const SentenceVector& a, const SentenceVector& b);

}  // namespace vsum
