#include "vsum/summarize.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include "vsum/errors.hpp"
#include "vsum/linalg.hpp"

namespace vsum {

namespace {

std::vector<SentenceScore> to_scores(const SubtitleTrack& track, const std::vector<double>& s) {
    std::vector<SentenceScore> out;
    out.reserve(s.size());
    for (size_t i = 0; i < s.size(); ++i)
        out.push_back(SentenceScore{track.cues[i].id, s[i]});
    return out;
}

// Top p by score, ties to the lower cue index; emitted in track order.
std::vector<int> select_top(const SubtitleTrack& track, const std::vector<double>& scores, int p) {
    std::vector<int> idx(scores.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return scores[a] > scores[b]; });
    idx.resize(static_cast<size_t>(p));
    std::sort(idx.begin(), idx.end());
    std::vector<int> ids;
    ids.reserve(idx.size());
    for (int i : idx) ids.push_back(track.cues[i].id);
    return ids;
}

SummaryResult make_result(Algorithm alg, const SubtitleTrack& track,
                          const std::vector<double>& scores, int p, bool degenerate) {
    SummaryResult r;
    r.algorithm = alg;
    r.scores = to_scores(track, scores);
    r.selected = select_top(track, scores, p);
    r.degenerate = degenerate;
    return r;
}

std::set<std::string> load_word_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError(ErrorClass::Input, "cannot open lexicon " + path);
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        for (char& c : line)
            if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
        words.insert(line);
    }
    return words;
}

}  // namespace

std::string_view algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::Luhn: return "luhn";
        case Algorithm::LSA: return "lsa";
        case Algorithm::TextRank: return "textrank";
        case Algorithm::LexRank: return "lexrank";
        case Algorithm::Edmundson: return "edmundson";
    }
    return "?";
}

std::optional<Algorithm> algorithm_from_name(std::string_view name) {
    for (Algorithm a : kAllAlgorithms)
        if (algorithm_name(a) == name) return a;
    return std::nullopt;
}

PSelect PSelect::from_count(int count) {
    if (count < 1) throw InvalidConfig("p_select count must be >= 1");
    PSelect p;
    p.count = count;
    return p;
}

PSelect PSelect::from_ratio(double ratio) {
    if (!(ratio > 0.0) || ratio > 1.0) throw InvalidConfig("p_select ratio must be in (0,1]");
    PSelect p;
    p.ratio = ratio;
    return p;
}

int PSelect::resolve(int n_sentences) const {
    if (n_sentences < 1) throw InvalidConfig("cannot resolve p_select for an empty track");
    int p = count > 0 ? count : static_cast<int>(std::ceil(ratio * n_sentences));
    return std::clamp(p, 1, n_sentences);
}

EdmundsonLexicons EdmundsonLexicons::load(const std::string& bonus_path,
                                          const std::string& stigma_path,
                                          const std::string& null_path) {
    EdmundsonLexicons lex;
    lex.bonus_words = load_word_file(bonus_path);
    lex.stigma_words = load_word_file(stigma_path);
    lex.null_words = load_word_file(null_path);
    lex.validate();
    return lex;
}

void EdmundsonLexicons::validate() const {
    auto overlap = [](const std::set<std::string>& a, const std::set<std::string>& b) {
        for (const auto& w : a)
            if (b.count(w)) return true;
        return false;
    };
    if (overlap(bonus_words, stigma_words) || overlap(bonus_words, null_words) ||
        overlap(stigma_words, null_words))
        throw InvalidConfig("edmundson lexicons must be pairwise disjoint");
}

SummaryResult luhn(const SubtitleTrack& track, const SummaryConfig& cfg, const Stopwords& stop) {
    if (track.empty()) throw EmptyTrack("luhn: empty track");
    const int n = static_cast<int>(track.size());
    const int p = cfg.p_select.resolve(n);

    TermStats stats = build_stats(track, stop);
    std::set<std::string> significant;
    for (const auto& [term, count] : stats.tf)
        if (count >= cfg.luhn_significance_cutoff) significant.insert(term);

    std::vector<double> scores(track.size(), 0.0);
    auto tokens = tokenize_track(track, stop);
    for (size_t i = 0; i < tokens.size(); ++i) {
        if (cfg.luhn_count_each_occurrence) {
            for (const auto& tok : tokens[i])
                if (!tok.is_stopword && significant.count(tok.surface))
                    scores[i] += stats.tf.at(tok.surface);
        } else {
            std::set<std::string> seen;
            for (const auto& tok : tokens[i])
                if (!tok.is_stopword && significant.count(tok.surface) && seen.insert(tok.surface).second)
                    scores[i] += stats.tf.at(tok.surface);
        }
    }
    return make_result(Algorithm::Luhn, track, scores, p, significant.empty());
}

SummaryResult lsa(const SubtitleTrack& track, const SummaryConfig& cfg, const Stopwords& stop) {
    if (track.empty()) throw EmptyTrack("lsa: empty track");
    const int n = static_cast<int>(track.size());
    const int p = cfg.p_select.resolve(n);

    TermStats stats = build_stats(track, stop);
    auto vectors = sentence_vectors(track, stats, VectorWeighting::Tf, stop);
    int cues_with_terms = 0;
    for (const auto& v : vectors)
        if (!v.empty()) ++cues_with_terms;
    if (stats.degenerate() || cues_with_terms < 2)
        return make_result(Algorithm::LSA, track, std::vector<double>(track.size(), 0.0), p, true);

    // term x sentence count matrix; rows in lexicographic term order
    std::vector<std::string> terms;
    terms.reserve(stats.tf.size());
    for (const auto& [term, _] : stats.tf) terms.push_back(term);
    Mat a(static_cast<int>(terms.size()), n);
    for (int j = 0; j < n; ++j)
        for (const auto& [term, w] : vectors[j]) {
            auto it = std::lower_bound(terms.begin(), terms.end(), term);
            a.at(static_cast<int>(it - terms.begin()), j) = w;
        }

    SvdResult dec = svd(a);
    // rank cutoff: treat tiny singular values as zero so exhausted
    // topics are never cycled
    double sigma_max = dec.singular_values.empty() ? 0.0 : dec.singular_values[0];
    int usable = 0;
    for (double s : dec.singular_values)
        if (s > sigma_max * 1e-12 && s > 0.0) ++usable;
    int topics = std::min(cfg.lsa_topics, usable);
    if (topics == 0)
        return make_result(Algorithm::LSA, track, std::vector<double>(track.size(), 0.0), p, true);

    std::vector<double> scores(track.size(), 0.0);
    for (int s = 0; s < n; ++s)
        for (int k = 0; k < topics; ++k)
            scores[s] = std::max(scores[s], std::fabs(dec.right_vectors.at(s, k)));

    // topic cycling: strongest topic first, one new sentence per step
    std::vector<bool> taken(track.size(), false);
    std::vector<int> picked_idx;
    int k = 0;
    while (static_cast<int>(picked_idx.size()) < p) {
        int best = -1;
        double best_load = -1.0;
        for (int s = 0; s < n; ++s) {
            if (taken[s]) continue;
            double load = std::fabs(dec.right_vectors.at(s, k));
            if (load > best_load) {
                best_load = load;
                best = s;
            }
        }
        taken[best] = true;
        picked_idx.push_back(best);
        k = (k + 1) % topics;
    }
    std::sort(picked_idx.begin(), picked_idx.end());

    SummaryResult r;
    r.algorithm = Algorithm::LSA;
    r.scores = to_scores(track, scores);
    for (int s : picked_idx) r.selected.push_back(track.cues[s].id);
    r.degenerate = false;
    return r;
}

SummaryResult textrank(const SubtitleTrack& track, const SummaryConfig& cfg, const Stopwords& stop) {
    if (track.empty()) throw EmptyTrack("textrank: empty track");
    const int n = static_cast<int>(track.size());
    const int p = cfg.p_select.resolve(n);

    TermStats stats = build_stats(track, stop);
    auto vectors = sentence_vectors(track, stats, VectorWeighting::Tf, stop);

    // cosine similarity, zero diagonal
    Mat sim(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double c = cosine(vectors[i], vectors[j]);
            sim.at(i, j) = c;
            sim.at(j, i) = c;
        }

    // row-normalize; a row with no outgoing similarity spreads uniformly
    for (int i = 0; i < n; ++i) {
        double row_sum = 0.0;
        for (int j = 0; j < n; ++j) row_sum += sim.at(i, j);
        if (row_sum == 0.0) {
            for (int j = 0; j < n; ++j) sim.at(i, j) = 1.0 / n;
        } else {
            for (int j = 0; j < n; ++j) sim.at(i, j) /= row_sum;
        }
    }

    const double d = cfg.textrank_damping;
    std::vector<double> rank(n, 1.0 / n), next(n, 0.0);
    for (int iter = 0; iter < cfg.textrank_max_iter; ++iter) {
        for (int i = 0; i < n; ++i) {
            double incoming = 0.0;
            for (int j = 0; j < n; ++j) incoming += sim.at(j, i) * rank[j];
            next[i] = (1.0 - d) / n + d * incoming;
        }
        double delta = 0.0;
        for (int i = 0; i < n; ++i) delta += std::fabs(next[i] - rank[i]);
        rank.swap(next);
        if (delta < cfg.textrank_epsilon) break;
    }

    return make_result(Algorithm::TextRank, track, rank, p, stats.degenerate());
}

SummaryResult lexrank(const SubtitleTrack& track, const SummaryConfig& cfg, const Stopwords& stop) {
    if (track.empty()) throw EmptyTrack("lexrank: empty track");
    const int n = static_cast<int>(track.size());
    const int p = cfg.p_select.resolve(n);

    TermStats stats = build_stats(track, stop);
    std::map<std::string, double> centroid;
    for (const auto& [term, count] : stats.tf) {
        double w = count * idf(stats, term);
        if (w > cfg.lexrank_centroid_threshold) centroid[term] = w;
    }

    std::vector<double> scores(track.size(), 0.0);
    auto tokens = tokenize_track(track, stop);
    for (size_t i = 0; i < tokens.size(); ++i) {
        std::set<std::string> seen;
        for (const auto& tok : tokens[i]) {
            if (tok.is_stopword || !seen.insert(tok.surface).second) continue;
            auto it = centroid.find(tok.surface);
            if (it != centroid.end()) scores[i] += it->second;
        }
    }
    return make_result(Algorithm::LexRank, track, scores, p, centroid.empty());
}

SummaryResult edmundson(const SubtitleTrack& track, const SummaryConfig& cfg,
                        const EdmundsonLexicons& lex, const Stopwords& stop) {
    if (track.empty()) throw EmptyTrack("edmundson: empty track");
    lex.validate();
    const int n = static_cast<int>(track.size());
    const int p = cfg.p_select.resolve(n);

    constexpr double w_cue = 1.0, w_key = 1.0, w_loc = 1.0;

    TermStats stats = build_stats(track, stop);
    std::set<std::string> significant;
    for (const auto& [term, count] : stats.tf)
        if (count >= cfg.luhn_significance_cutoff && !lex.null_words.count(term))
            significant.insert(term);

    const int decile = std::max(1, n / 10);
    std::vector<double> scores(track.size(), 0.0);
    auto tokens = tokenize_track(track, stop);
    for (int i = 0; i < n; ++i) {
        double cue_score = 0.0, key_score = 0.0;
        for (const auto& tok : tokens[i]) {
            if (lex.bonus_words.count(tok.surface)) cue_score += 1.0;
            if (lex.stigma_words.count(tok.surface)) cue_score -= 1.0;
            if (!tok.is_stopword && significant.count(tok.surface))
                key_score += stats.tf.at(tok.surface);
        }
        double loc_score = (i < decile || i >= n - decile) ? 1.0 : 0.0;
        scores[i] = w_cue * cue_score + w_key * key_score + w_loc * loc_score;
    }
    return make_result(Algorithm::Edmundson, track, scores, p, false);
}

SummaryResult summarize(Algorithm algorithm, const SubtitleTrack& track, const SummaryConfig& cfg,
                        const EdmundsonLexicons* lex, const Stopwords& stop) {
    switch (algorithm) {
        case Algorithm::Luhn: return luhn(track, cfg, stop);
        case Algorithm::LSA: return lsa(track, cfg, stop);
        case Algorithm::TextRank: return textrank(track, cfg, stop);
        case Algorithm::LexRank: return lexrank(track, cfg, stop);
        case Algorithm::Edmundson:
            if (!lex) throw MissingLexicons("edmundson requires bonus/stigma/null lexicons");
            return edmundson(track, cfg, *lex, stop);
    }
    throw Error(ErrorClass::Internal, "unknown algorithm");
}

}  // namespace vsum
