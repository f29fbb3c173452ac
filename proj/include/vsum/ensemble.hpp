#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "vsum/summarize.hpp"

namespace vsum {

// Weights are stored in exact micro-units (1e-6) so that repeated
// learning steps of 0.025 never accumulate binary rounding error and
// the state file round-trips digit for digit.
std::int64_t micros_from_decimal(const std::string& text);
std::string micros_to_decimal(std::int64_t micros);

// Per-algorithm voting weights plus the learning step size.
struct EnsembleWeights {
    std::map<Algorithm, std::int64_t> w_micros;
    std::int64_t delta_micros = 25000;  // 0.025

    // All five weights at 1.0, the neutral starting point.
    static EnsembleWeights defaults();

    static EnsembleWeights load(const std::string& path);
    static EnsembleWeights load_or_default(const std::string& path);
    void save(const std::string& path) const;

    double weight(Algorithm a) const;
    std::string weight_text(Algorithm a) const;
    std::string delta_text() const { return micros_to_decimal(delta_micros); }

    void validate() const;  // weights >= 0, delta > 0, all slots present
};

enum class EnsembleMethod { Intersection, Weighted };

struct EnsembleResult {
    EnsembleMethod method = EnsembleMethod::Intersection;
    std::vector<int> selected;               // ascending cue ids
    std::vector<Algorithm> contributing;
    std::map<int, double> sentence_scores;   // weighted method only
};

// Cues picked by every contributing algorithm. Requires >= 2 results
// over the same cue universe.
EnsembleResult intersect(const std::vector<SummaryResult>& results);

// Weighted voting: score(cue) = sum of w[a] over algorithms whose
// selection contains the cue. Top p_select among the union of selections,
// ties to the lower cue id. Scoring is done in micro-units, so equal
// decimal weights compare exactly equal.
EnsembleResult weighted_select(const std::vector<SummaryResult>& results,
                               const EnsembleWeights& weights, int p_select);

struct AlgorithmRanking {
    std::vector<Algorithm> order;  // best efficiency first
    // The intersection reference was empty: every efficiency is 0, the
    // order above is the fixed enum order, and no weight update should
    // be applied.
    bool reference_empty = false;
};

// Orders the contributing algorithms by efficiency against the
// intersection reference (|reference| / |selected|). With a fixed
// numerator that is simply ascending selection size; ties break in enum
// order.
AlgorithmRanking rank_algorithms(const std::vector<SummaryResult>& results,
                                 const EnsembleResult& reference);

// One learning step: best gains delta, worst loses delta (floored at
// zero), everyone else keeps their weight.
EnsembleWeights update_weights(const EnsembleWeights& weights,
                               const std::vector<Algorithm>& ranking);

// Read-modify-write on the weight state file under an exclusive
// advisory lock (<path>.lock), so concurrent corpus runs serialize.
// Returns the stored result of fn.
EnsembleWeights update_state_file(const std::string& path,
                                  const std::function<EnsembleWeights(EnsembleWeights)>& fn);

}  // namespace vsum
