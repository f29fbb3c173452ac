#include "vsum/textprep.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "vsum/errors.hpp"

namespace vsum {

namespace {

// Kept in sync with data/stopwords_en.txt (a unit test compares them).
constexpr const char* kBuiltinStopwords[] = {
    "a", "about", "above", "after", "again", "against", "all", "also", "am", "an", "and",
    "any", "are", "aren", "as", "at", "be", "because", "been", "before", "being", "below",
    "between", "both", "but", "by", "can", "cannot", "could", "d", "did", "do", "does",
    "doing", "don", "down", "during", "each", "few", "for", "from", "further", "had",
    "has", "have", "having", "he", "her", "here", "hers", "herself", "him", "himself",
    "his", "how", "however", "i", "if", "in", "into", "is", "isn", "it", "its", "itself",
    "just", "ll", "m", "me", "might", "more", "most", "must", "my", "myself", "no", "nor",
    "not", "now", "of", "off", "on", "once", "only", "or", "other", "ought", "our", "ours",
    "ourselves", "out", "over", "own", "re", "s", "same", "shall", "she", "should", "so",
    "some", "such", "t", "than", "that", "the", "their", "theirs", "them", "themselves",
    "then", "there", "these", "they", "this", "those", "through", "to", "too", "under",
    "until", "up", "upon", "us", "ve", "very", "via", "was", "wasn", "we", "were", "weren",
    "what", "when", "where", "which", "while", "who", "whom", "why", "will", "with", "won",
    "would", "yet", "you", "your", "yours", "yourself", "yourselves",
};

}  // namespace

const Stopwords& Stopwords::builtin() {
    static const Stopwords instance = [] {
        Stopwords s;
        for (const char* w : kBuiltinStopwords) s.words_.insert(w);
        return s;
    }();
    return instance;
}

Stopwords Stopwords::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError(ErrorClass::Input, "cannot open stopword list " + path);
    Stopwords s;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) s.words_.insert(line);
    }
    return s;
}

Stopwords Stopwords::from_words(std::vector<std::string> words) {
    Stopwords s;
    for (auto& w : words) s.words_.insert(std::move(w));
    return s;
}

bool Stopwords::contains(std::string_view word) const {
    return words_.find(std::string(word)) != words_.end();
}

std::vector<Token> tokenize(std::string_view text, const Stopwords& stop) {
    std::vector<Token> tokens;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) {
            bool sw = stop.contains(current);
            tokens.push_back(Token{std::move(current), sw});
            current.clear();
        }
    };
    for (char ch : text) {
        if (ch >= 'a' && ch <= 'z') {
            current += ch;
        } else if (ch >= 'A' && ch <= 'Z') {
            current += static_cast<char>(ch - 'A' + 'a');
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

std::vector<std::vector<Token>> tokenize_track(const SubtitleTrack& track, const Stopwords& stop) {
    std::vector<std::vector<Token>> out;
    out.reserve(track.cues.size());
    for (const auto& cue : track.cues) out.push_back(tokenize(cue.text, stop));
    return out;
}

TermStats build_stats(const SubtitleTrack& track, const Stopwords& stop) {
    if (track.empty()) throw EmptyTrack("cannot build term stats for an empty track");
    TermStats stats;
    stats.n_sentences = static_cast<int>(track.size());
    for (const auto& cue : track.cues) {
        std::map<std::string, int> seen;
        for (auto& tok : tokenize(cue.text, stop)) {
            if (tok.is_stopword) continue;
            ++stats.tf[tok.surface];
            ++seen[tok.surface];
        }
        for (const auto& [term, _] : seen) ++stats.df[term];
    }
    return stats;
}

double idf(const TermStats& stats, const std::string& term) {
    auto it = stats.df.find(term);
    if (it == stats.df.end()) throw UnknownTerm("term not in document: '" + term + "'");
    if (it->second == stats.n_sentences) return 0.0;
    return std::log(static_cast<double>(stats.n_sentences) / static_cast<double>(it->second));
}

std::vector<SentenceVector> sentence_vectors(const SubtitleTrack& track, const TermStats& stats,
                                             VectorWeighting weighting, const Stopwords& stop) {
    std::vector<SentenceVector> vectors;
    vectors.reserve(track.cues.size());
    for (const auto& cue : track.cues) {
        SentenceVector v;
        for (auto& tok : tokenize(cue.text, stop)) {
            if (tok.is_stopword) continue;
            v[tok.surface] += 1.0;
        }
        if (weighting == VectorWeighting::TfIdf) {
            for (auto it = v.begin(); it != v.end();) {
                double w = it->second * idf(stats, it->first);
                if (w == 0.0) {
                    it = v.erase(it);
                } else {
                    it->second = w;
                    ++it;
                }
            }
        }
        vectors.push_back(std::move(v));
    }
    return vectors;
}

double cosine(const SentenceVector& a, const SentenceVector& b) {
    if (a.empty() || b.empty()) return 0.0;
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (const auto& [t, w] : a) na += w * w;
    for (const auto& [t, w] : b) nb += w * w;
    const SentenceVector& small = a.size() <= b.size() ? a : b;
    const SentenceVector& large = a.size() <= b.size() ? b : a;
    for (const auto& [t, w] : small) {
        auto it = large.find(t);
        if (it != large.end()) dot += w * it->second;
    }
    if (dot == 0.0) return 0.0;
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace vsum
