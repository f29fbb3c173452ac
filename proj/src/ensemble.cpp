#include "vsum/ensemble.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <set>

#include "vsum/errors.hpp"
#include "vsum/kv.hpp"

namespace vsum {

namespace {

constexpr std::int64_t kMicro = 1000000;

int enum_index(Algorithm a) {
    for (size_t i = 0; i < kAllAlgorithms.size(); ++i)
        if (kAllAlgorithms[i] == a) return static_cast<int>(i);
    return static_cast<int>(kAllAlgorithms.size());
}

// Every result must cover the same cue universe in the same order.
void require_same_track(const std::vector<SummaryResult>& results) {
    if (results.size() < 2) throw TooFewAlgorithms("ensemble needs at least 2 results");
    const auto& first = results.front().scores;
    for (size_t k = 1; k < results.size(); ++k) {
        const auto& other = results[k].scores;
        if (other.size() != first.size())
            throw MismatchedTracks("results cover different numbers of cues");
        for (size_t i = 0; i < first.size(); ++i)
            if (other[i].cue_id != first[i].cue_id)
                throw MismatchedTracks("results cover different cue ids");
    }
}

struct LockGuard {
    int fd = -1;
    explicit LockGuard(const std::string& path) {
        fd = ::open(path.c_str(), O_CREAT | O_RDWR | O_CLOEXEC, 0644);
        if (fd < 0) throw IoError(ErrorClass::Internal, "cannot open lock file " + path);
        if (::flock(fd, LOCK_EX) != 0) {
            ::close(fd);
            throw IoError(ErrorClass::Internal, "cannot lock " + path);
        }
    }
    ~LockGuard() {
        if (fd >= 0) {
            ::flock(fd, LOCK_UN);
            ::close(fd);
        }
    }
};

}  // namespace

std::int64_t micros_from_decimal(const std::string& text) {
    size_t dot = text.find('.');
    std::string int_part = dot == std::string::npos ? text : text.substr(0, dot);
    std::string frac_part = dot == std::string::npos ? "" : text.substr(dot + 1);
    if (int_part.empty() || int_part.size() > 9 || frac_part.size() > 6)
        throw InvalidConfig("not a weight value: '" + text + "'");
    for (char c : int_part + frac_part)
        if (c < '0' || c > '9') throw InvalidConfig("not a weight value: '" + text + "'");
    std::int64_t whole = 0;
    for (char c : int_part) whole = whole * 10 + (c - '0');
    std::int64_t frac = 0;
    for (char c : frac_part) frac = frac * 10 + (c - '0');
    for (size_t i = frac_part.size(); i < 6; ++i) frac *= 10;
    return whole * kMicro + frac;
}

std::string micros_to_decimal(std::int64_t micros) {
    std::string frac = std::to_string(micros % kMicro);
    frac.insert(0, 6 - frac.size(), '0');
    while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
    return std::to_string(micros / kMicro) + "." + frac;
}

EnsembleWeights EnsembleWeights::defaults() {
    EnsembleWeights w;
    for (Algorithm a : kAllAlgorithms) w.w_micros[a] = kMicro;
    return w;
}

EnsembleWeights EnsembleWeights::load(const std::string& path) {
    kv::Document doc = kv::Document::parse(kv::read_file(path));
    EnsembleWeights w;
    for (Algorithm a : kAllAlgorithms) {
        std::string key(algorithm_name(a));
        if (!doc.has(key)) throw MissingWeight("weight file lacks key '" + key + "'");
        w.w_micros[a] = micros_from_decimal(doc.get(key));
    }
    if (!doc.has("delta")) throw MissingWeight("weight file lacks key 'delta'");
    w.delta_micros = micros_from_decimal(doc.get("delta"));
    w.validate();
    return w;
}

EnsembleWeights EnsembleWeights::load_or_default(const std::string& path) {
    if (!std::filesystem::exists(path)) return defaults();
    return load(path);
}

void EnsembleWeights::save(const std::string& path) const {
    validate();
    kv::Document doc;
    for (Algorithm a : kAllAlgorithms)
        doc.set(std::string(algorithm_name(a)), weight_text(a));
    doc.set("delta", delta_text());
    doc.save(path);
}

double EnsembleWeights::weight(Algorithm a) const {
    auto it = w_micros.find(a);
    if (it == w_micros.end())
        throw MissingWeight("no weight for " + std::string(algorithm_name(a)));
    return static_cast<double>(it->second) / kMicro;
}

std::string EnsembleWeights::weight_text(Algorithm a) const {
    auto it = w_micros.find(a);
    if (it == w_micros.end())
        throw MissingWeight("no weight for " + std::string(algorithm_name(a)));
    return micros_to_decimal(it->second);
}

void EnsembleWeights::validate() const {
    for (Algorithm a : kAllAlgorithms) {
        auto it = w_micros.find(a);
        if (it == w_micros.end())
            throw MissingWeight("no weight for " + std::string(algorithm_name(a)));
        if (it->second < 0)
            throw InvalidConfig("negative weight for " + std::string(algorithm_name(a)));
    }
    if (delta_micros <= 0) throw InvalidConfig("delta must be positive");
}

EnsembleResult intersect(const std::vector<SummaryResult>& results) {
    require_same_track(results);
    EnsembleResult out;
    out.method = EnsembleMethod::Intersection;
    for (const auto& r : results) out.contributing.push_back(r.algorithm);

    std::set<int> common(results[0].selected.begin(), results[0].selected.end());
    for (size_t k = 1; k < results.size(); ++k) {
        std::set<int> theirs(results[k].selected.begin(), results[k].selected.end());
        std::set<int> kept;
        for (int id : common)
            if (theirs.count(id)) kept.insert(id);
        common.swap(kept);
    }
    out.selected.assign(common.begin(), common.end());
    return out;
}

EnsembleResult weighted_select(const std::vector<SummaryResult>& results,
                               const EnsembleWeights& weights, int p_select) {
    require_same_track(results);
    if (p_select < 1) throw InvalidConfig("p_select must be >= 1");

    // candidates are the union of the individual selections
    std::map<int, std::int64_t> vote_micros;
    for (const auto& r : results) {
        auto it = weights.w_micros.find(r.algorithm);
        if (it == weights.w_micros.end())
            throw MissingWeight("no weight for " + std::string(algorithm_name(r.algorithm)));
        for (int id : r.selected) vote_micros[id] += it->second;
    }

    std::vector<int> ids;
    ids.reserve(vote_micros.size());
    for (const auto& [id, _] : vote_micros) ids.push_back(id);
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        if (vote_micros[a] != vote_micros[b]) return vote_micros[a] > vote_micros[b];
        return a < b;
    });
    if (static_cast<int>(ids.size()) > p_select) ids.resize(static_cast<size_t>(p_select));
    std::sort(ids.begin(), ids.end());

    EnsembleResult out;
    out.method = EnsembleMethod::Weighted;
    for (const auto& r : results) out.contributing.push_back(r.algorithm);
    out.selected = std::move(ids);
    for (const auto& [id, m] : vote_micros)
        out.sentence_scores[id] = static_cast<double>(m) / kMicro;
    return out;
}

AlgorithmRanking rank_algorithms(const std::vector<SummaryResult>& results,
                                 const EnsembleResult& reference) {
    require_same_track(results);
    AlgorithmRanking ranking;
    ranking.reference_empty = reference.selected.empty();

    std::vector<std::pair<int, Algorithm>> order;  // (selection size, algorithm)
    for (const auto& r : results) {
        if (r.selected.empty())
            throw UndefinedEfficiency("algorithm " + std::string(algorithm_name(r.algorithm)) +
                                      " selected nothing");
        order.emplace_back(static_cast<int>(r.selected.size()), r.algorithm);
    }
    // efficiency = |reference| / |selected|: with the numerator fixed,
    // descending efficiency is ascending selection size
    std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
        if (!ranking.reference_empty && a.first != b.first) return a.first < b.first;
        return enum_index(a.second) < enum_index(b.second);
    });
    for (const auto& [_, a] : order) ranking.order.push_back(a);
    return ranking;
}

EnsembleWeights update_weights(const EnsembleWeights& weights,
                               const std::vector<Algorithm>& ranking) {
    std::set<Algorithm> distinct(ranking.begin(), ranking.end());
    if (ranking.size() < 2 || distinct.size() != ranking.size())
        throw TooFewAlgorithms("weight update needs a ranking of >= 2 distinct algorithms");
    weights.validate();

    EnsembleWeights next = weights;
    next.w_micros[ranking.front()] += weights.delta_micros;
    std::int64_t& worst = next.w_micros[ranking.back()];
    worst = std::max<std::int64_t>(0, worst - weights.delta_micros);
    return next;
}

EnsembleWeights update_state_file(const std::string& path,
                                  const std::function<EnsembleWeights(EnsembleWeights)>& fn) {
    LockGuard lock(path + ".lock");
    EnsembleWeights next = fn(EnsembleWeights::load_or_default(path));
    next.save(path);
    return next;
}

}  // namespace vsum
