#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "vsum/srt.hpp"
#include "vsum/textprep.hpp"

namespace vsum {

// Declaration order is the fixed tie-break order used by the ensemble
// ranking; keep it stable.
enum class Algorithm { Luhn, LSA, TextRank, LexRank, Edmundson };

constexpr std::array<Algorithm, 5> kAllAlgorithms = {
    Algorithm::Luhn, Algorithm::LSA, Algorithm::TextRank, Algorithm::LexRank,
    Algorithm::Edmundson};

std::string_view algorithm_name(Algorithm a);
std::optional<Algorithm> algorithm_from_name(std::string_view name);

// Number of sentences to keep: an explicit count, or a ratio of the
// track size. Resolves to [1, n].
struct PSelect {
    static PSelect from_count(int count);
    static PSelect from_ratio(double ratio);

    int resolve(int n_sentences) const;

    int count = 0;        // wins when > 0
    double ratio = 0.2;
};

struct SummaryConfig {
    PSelect p_select;
    double textrank_damping = 0.85;
    double textrank_epsilon = 1e-6;
    int textrank_max_iter = 200;
    double lexrank_centroid_threshold = 0.0;
    int luhn_significance_cutoff = 2;
    // Significant words score once per occurrence; off scores them once
    // per sentence.
    bool luhn_count_each_occurrence = true;
    int lsa_topics = 3;
};

struct SentenceScore {
    int cue_id = 0;
    double score = 0.0;
};

struct SummaryResult {
    Algorithm algorithm = Algorithm::Luhn;
    std::vector<SentenceScore> scores;  // every cue, track order
    std::vector<int> selected;          // cue ids, original track order
    // Set when the track gave the algorithm nothing to rank on; the
    // selection falls back to the first cues in track order.
    bool degenerate = false;
};

struct EdmundsonLexicons {
    std::set<std::string> bonus_words;
    std::set<std::string> stigma_words;
    std::set<std::string> null_words;

    // One lowercase term per line per file. The three sets must be
    // pairwise disjoint.
    static EdmundsonLexicons load(const std::string& bonus_path, const std::string& stigma_path,
                                  const std::string& null_path);
    void validate() const;
};

// Frequency method: a sentence scores the summed document frequency of
// its significant words (non-stopword terms occurring at least
// `luhn_significance_cutoff` times).
SummaryResult luhn(const SubtitleTrack& track, const SummaryConfig& cfg,
                   const Stopwords& stop = Stopwords::builtin());

// Topic method: SVD of the term x sentence count matrix; topics are
// cycled, each picking the unselected sentence with the largest
// absolute loading in that topic's right singular vector.
SummaryResult lsa(const SubtitleTrack& track, const SummaryConfig& cfg,
                  const Stopwords& stop = Stopwords::builtin());

// Graph method: damped power iteration over the row-normalized cosine
// similarity matrix of sentence tf vectors. Zero rows are replaced by
// uniform rows before normalization.
SummaryResult textrank(const SubtitleTrack& track, const SummaryConfig& cfg,
                       const Stopwords& stop = Stopwords::builtin());

// Centroid method: terms with tf*idf above the threshold form the
// centroid; a sentence scores the summed tf*idf of the distinct
// centroid terms it contains.
SummaryResult lexrank(const SubtitleTrack& track, const SummaryConfig& cfg,
                      const Stopwords& stop = Stopwords::builtin());

// Cue-word method: bonus/stigma hits plus the key-word score plus a
// first/last-decile location bonus, at equal unit weights. Null words
// are dropped from the key-word statistics.
SummaryResult edmundson(const SubtitleTrack& track, const SummaryConfig& cfg,
                        const EdmundsonLexicons& lex,
                        const Stopwords& stop = Stopwords::builtin());

// Dispatch by enum; Edmundson requires lexicons and throws
// MissingLexicons without them.
SummaryResult summarize(Algorithm algorithm, const SubtitleTrack& track, const SummaryConfig& cfg,
                        const EdmundsonLexicons* lex = nullptr,
                        const Stopwords& stop = Stopwords::builtin());

}  // namespace vsum
