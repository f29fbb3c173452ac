// Acceptance gate. Each criterion below checks one externally stated
// guarantee of the toolkit, most against an oracle implemented here
// with independent code, and each carries a wall-clock budget. The
// binary prints exactly one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <initializer_list>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "synth_media.hpp"
#include "vsum/asr.hpp"
#include "vsum/audio.hpp"
#include "vsum/audioseg.hpp"
#include "vsum/cutplan.hpp"
#include "vsum/ensemble.hpp"
#include "vsum/errors.hpp"
#include "vsum/kv.hpp"
#include "vsum/linalg.hpp"
#include "vsum/metrics.hpp"
#include "vsum/pipeline.hpp"
#include "vsum/srt.hpp"
#include "vsum/summarize.hpp"
#include "vsum/textprep.hpp"

namespace {

using namespace vsum;

const std::string kSourceDir = VSUM_SOURCE_DIR;

// Collects failures; a criterion passes when none were recorded.
struct Checks {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

SubtitleTrack make_track(const std::vector<std::string>& texts) {
    SubtitleTrack track;
    for (size_t i = 0; i < texts.size(); ++i) {
        SubtitleCue cue;
        cue.id = static_cast<int>(i) + 1;
        cue.start.millis = static_cast<std::int64_t>(i) * 2000;
        cue.end.millis = cue.start.millis + 1500;
        cue.text = texts[i];
        track.cues.push_back(cue);
    }
    return track;
}

std::string ids_text(const std::vector<int>& ids) {
    std::string out = "{";
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(ids[i]);
    }
    return out + "}";
}

SummaryResult result_with(Algorithm a, std::vector<int> selected) {
    SummaryResult r;
    r.algorithm = a;
    r.selected = std::move(selected);
    return r;
}

std::vector<int> random_selection(std::mt19937& rng, int universe, int count) {
    std::vector<int> ids(universe);
    for (int i = 0; i < universe; ++i) ids[i] = i + 1;
    std::shuffle(ids.begin(), ids.end(), rng);
    ids.resize(static_cast<size_t>(count));
    std::sort(ids.begin(), ids.end());
    return ids;
}

// ---------------------------------------------------------------- 1, 2

void check_weight_update_step(Checks& c) {
    EnsembleWeights w = update_weights(
        EnsembleWeights::defaults(),
        {Algorithm::Luhn, Algorithm::LSA, Algorithm::TextRank, Algorithm::Edmundson,
         Algorithm::LexRank});
    c.expect(w.w_micros.at(Algorithm::Luhn) == 1025000, "best weight is not exactly 1.025");
    c.expect(w.w_micros.at(Algorithm::LexRank) == 975000, "worst weight is not exactly 0.975");
    c.expect(w.w_micros.at(Algorithm::LSA) == 1000000, "lsa weight moved");
    c.expect(w.w_micros.at(Algorithm::TextRank) == 1000000, "textrank weight moved");
    c.expect(w.w_micros.at(Algorithm::Edmundson) == 1000000, "edmundson weight moved");
    c.expect(w.weight_text(Algorithm::Luhn) == "1.025", "best weight text mismatch");
    c.expect(w.weight_text(Algorithm::LexRank) == "0.975", "worst weight text mismatch");
}

void check_weight_update_trajectory(Checks& c) {
    EnsembleWeights w = EnsembleWeights::defaults();
    const std::vector<Algorithm> ranking = {Algorithm::LSA, Algorithm::Luhn,
                                            Algorithm::TextRank, Algorithm::Edmundson,
                                            Algorithm::LexRank};
    for (int i = 0; i < 39; ++i) w = update_weights(w, ranking);
    c.expect(w.w_micros.at(Algorithm::LSA) == 1975000, "best weight is not exactly 1.975");
    c.expect(w.w_micros.at(Algorithm::LexRank) == 25000, "worst weight is not exactly 0.025");
    c.expect(w.weight_text(Algorithm::LSA) == "1.975", "best weight text mismatch");
    c.expect(w.weight_text(Algorithm::LexRank) == "0.025", "worst weight text mismatch");
    c.expect(w.w_micros.at(Algorithm::Luhn) == 1000000 &&
                 w.w_micros.at(Algorithm::TextRank) == 1000000 &&
                 w.w_micros.at(Algorithm::Edmundson) == 1000000,
             "middle weights moved");
}

// ------------------------------------------------------------------- 3

void check_efficiency_arithmetic(Checks& c) {
    c.expect(efficiency(10, 25) == 0.4, "efficiency(10,25) is not exactly 0.4");
    for (int k = 1; k <= 100; ++k)
        c.expect(efficiency(k, k) == 1.0,
                 "efficiency(" + std::to_string(k) + "," + std::to_string(k) + ") != 1");

    std::mt19937 rng(20260819);
    for (int round = 0; round < 1000; ++round) {
        const int universe = 5 + static_cast<int>(rng() % 56);
        const int n_algorithms = 2 + static_cast<int>(rng() % 4);
        std::vector<SummaryResult> results;
        for (int a = 0; a < n_algorithms; ++a) {
            const int count = 1 + static_cast<int>(rng() % universe);
            results.push_back(result_with(kAllAlgorithms[static_cast<size_t>(a)],
                                          random_selection(rng, universe, count)));
        }
        EnsembleResult combined = intersect(results);
        const int n_combined = static_cast<int>(combined.selected.size());
        for (const auto& r : results) {
            const double e = efficiency(n_combined, static_cast<int>(r.selected.size()));
            c.expect(e >= 0.0 && e <= 1.0, "intersection-referenced efficiency out of [0,1]");
        }
        EfficiencyReport report = build_report("r" + std::to_string(round), results, combined);
        for (const auto& [algo, row] : report.per_algorithm)
            c.expect(row.efficiency <= 1.0, "report efficiency above 1");
    }
}

// ------------------------------------------------------------------- 4

void check_intersection_ensemble(Checks& c) {
    std::mt19937 rng(411);
    const int universe = 50;
    for (int round = 0; round < 200; ++round) {
        std::vector<SummaryResult> results;
        for (int a = 0; a < 4; ++a) {
            const int count = 1 + static_cast<int>(rng() % universe);
            results.push_back(result_with(kAllAlgorithms[static_cast<size_t>(a)],
                                          random_selection(rng, universe, count)));
        }

        // brute force membership: keep the ids every selection contains
        std::vector<int> expected;
        for (int id = 1; id <= universe; ++id) {
            bool in_all = true;
            for (const auto& r : results)
                in_all = in_all &&
                         std::find(r.selected.begin(), r.selected.end(), id) != r.selected.end();
            if (in_all) expected.push_back(id);
        }

        EnsembleResult combined = intersect(results);
        c.expect(combined.selected == expected,
                 "intersection disagrees with the membership oracle: got " +
                     ids_text(combined.selected) + " want " + ids_text(expected));
        for (const auto& r : results)
            c.expect(std::includes(r.selected.begin(), r.selected.end(),
                                   combined.selected.begin(), combined.selected.end()),
                     "intersection is not a subset of an input selection");

        std::vector<SummaryResult> shuffled = results;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        c.expect(intersect(shuffled).selected == combined.selected,
                 "intersection depends on input order");
    }
}

// ------------------------------------------------------------------- 5

void check_textrank_equivalence(Checks& c) {
    const std::vector<std::string> vocab = {
        "network", "video",  "summary", "viewer", "segment", "ranking",
        "signal",  "speech", "frame",   "topic",  "camera",  "scene",
        "motion",  "detail", "story",   "sound"};
    std::mt19937 rng(5150);

    for (int round = 0; round < 25; ++round) {
        const int n = 4 + static_cast<int>(rng() % 7);
        std::vector<std::string> texts;
        for (int i = 0; i < n; ++i) {
            const int words = 3 + static_cast<int>(rng() % 6);
            std::string s;
            for (int w = 0; w < words; ++w) {
                if (w) s += ' ';
                s += vocab[rng() % vocab.size()];
            }
            texts.push_back(s);
        }

        SummaryConfig cfg;
        cfg.p_select = PSelect::from_count(1);
        cfg.textrank_epsilon = 1e-12;
        SummaryResult r = textrank(make_track(texts), cfg);

        double total = 0.0;
        for (const auto& s : r.scores) total += s.score;
        c.expect(std::fabs(total - 1.0) <= 1e-9, "scores do not sum to 1");

        // oracle: rebuild the chain from the raw texts and run a dense
        // power iteration to effective convergence
        std::vector<std::map<std::string, int>> bags(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            std::string word;
            for (char ch : texts[static_cast<size_t>(i)] + " ") {
                if (ch >= 'a' && ch <= 'z') {
                    word += ch;
                } else if (!word.empty()) {
                    if (!Stopwords::builtin().contains(word))
                        bags[static_cast<size_t>(i)][word] += 1;
                    word.clear();
                }
            }
        }
        auto dot = [](const std::map<std::string, int>& a, const std::map<std::string, int>& b) {
            double s = 0.0;
            for (const auto& [w, n_a] : a) {
                auto it = b.find(w);
                if (it != b.end()) s += static_cast<double>(n_a) * it->second;
            }
            return s;
        };
        std::vector<std::vector<double>> m(static_cast<size_t>(n),
                                           std::vector<double>(static_cast<size_t>(n), 0.0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) {
                    const auto& bi = bags[static_cast<size_t>(i)];
                    const auto& bj = bags[static_cast<size_t>(j)];
                    double den = std::sqrt(dot(bi, bi)) * std::sqrt(dot(bj, bj));
                    if (den > 0.0)
                        m[static_cast<size_t>(i)][static_cast<size_t>(j)] = dot(bi, bj) / den;
                }
        for (auto& row : m) {
            double sum = 0.0;
            for (double v : row) sum += v;
            for (double& v : row) v = sum > 0.0 ? v / sum : 1.0 / n;
        }
        std::vector<double> pr(static_cast<size_t>(n), 1.0 / n);
        for (int it = 0; it < 10000; ++it) {
            std::vector<double> next(static_cast<size_t>(n), 0.0);
            for (int i = 0; i < n; ++i) {
                double in = 0.0;
                for (int j = 0; j < n; ++j)
                    in += m[static_cast<size_t>(j)][static_cast<size_t>(i)] *
                          pr[static_cast<size_t>(j)];
                next[static_cast<size_t>(i)] = 0.15 / n + 0.85 * in;
            }
            pr = next;
        }

        double linf = 0.0;
        for (int i = 0; i < n; ++i)
            linf = std::max(linf,
                            std::fabs(r.scores[static_cast<size_t>(i)].score -
                                      pr[static_cast<size_t>(i)]));
        c.expect(linf <= 1e-6,
                 "round " + std::to_string(round) + ": L-inf distance to the oracle is " +
                     std::to_string(linf));
    }
}

// ------------------------------------------------------------------- 6

void check_lsa_equivalence(Checks& c) {
    auto fill = [](int rows, int cols, std::initializer_list<double> vals) {
        Mat m(rows, cols);
        int i = 0;
        for (double v : vals) m.a[static_cast<size_t>(i++)] = v;
        return m;
    };

    // references computed with an independent numerical package before
    // this implementation existed
    {
        SvdResult dec = svd(fill(3, 3, {2, 0, 1, 0, 3, 1, 1, 1, 1}));
        const double want[] = {3.532088886237956, 2.347296355333861, 0.12061475842818319};
        for (int i = 0; i < 3; ++i)
            c.expect(std::fabs(dec.singular_values[static_cast<size_t>(i)] - want[i]) <= 1e-8,
                     "3x3 singular value " + std::to_string(i) + " off");
    }
    {
        SvdResult dec = svd(fill(5, 4,
                                 {1, 0, 2, 0,
                                  3, 1, 0, 1,
                                  0, 2, 1, 0,
                                  1, 1, 0, 2,
                                  0, 0, 1, 1}));
        const double want[] = {4.147456102668012, 2.367961173129409, 1.896814146834248,
                               1.6104235006242678};
        for (int i = 0; i < 4; ++i)
            c.expect(std::fabs(dec.singular_values[static_cast<size_t>(i)] - want[i]) <= 1e-8,
                     "5x4 singular value " + std::to_string(i) + " off");
    }

    // two orthogonal word blocks; the strongest sentence of each block
    // wins its topic, then cycling fills the rest
    auto track = make_track({"alpha alpha alpha beta", "alpha beta beta", "gamma gamma delta",
                             "gamma delta"});
    SummaryConfig cfg;
    cfg.lsa_topics = 2;
    cfg.p_select = PSelect::from_count(2);
    SummaryResult two = lsa(track, cfg);
    c.expect(two.selected == std::vector<int>{1, 3},
             "topic selection mismatch: got " + ids_text(two.selected));
    cfg.p_select = PSelect::from_count(4);
    SummaryResult four = lsa(track, cfg);
    c.expect(four.selected == std::vector<int>{1, 2, 3, 4},
             "topic cycling mismatch: got " + ids_text(four.selected));
}

// ------------------------------------------------------------------- 7

void check_frequency_centroid_fixtures(Checks& c) {
    // expected selections and score tables precomputed by hand from the
    // documented scoring rules; selections must match exactly
    auto run_luhn = [&](const std::vector<std::string>& texts, int count, int cutoff,
                        const std::vector<int>& want_sel, const std::vector<double>& want_scores,
                        const std::string& label) {
        SummaryConfig cfg;
        cfg.p_select = PSelect::from_count(count);
        cfg.luhn_significance_cutoff = cutoff;
        SummaryResult r = luhn(make_track(texts), cfg);
        c.expect(r.selected == want_sel, label + ": selection mismatch " + ids_text(r.selected));
        for (size_t i = 0; i < want_scores.size(); ++i)
            c.expect(r.scores[i].score == want_scores[i], label + ": score table mismatch");
    };
    run_luhn({"cats like cats", "dogs bark", "cats sleep"}, 1, 2, {1}, {6, 0, 3}, "luhn-a");
    run_luhn({"the quick brown fox jumps over the lazy dog", "the dog barks at the fox",
              "a lazy cat sleeps all day", "the fox and the dog play",
              "cats and dogs never agree"},
             2, 2, {1, 2}, {8, 6, 2, 6, 0}, "luhn-b");
    run_luhn({"data data data", "data systems", "systems work"}, 1, 3, {1}, {12, 4, 0},
             "luhn-c");

    auto run_lexrank = [&](const std::vector<std::string>& texts, int count, double threshold,
                           const std::vector<int>& want_sel,
                           const std::vector<double>& want_scores, const std::string& label) {
        SummaryConfig cfg;
        cfg.p_select = PSelect::from_count(count);
        cfg.lexrank_centroid_threshold = threshold;
        SummaryResult r = lexrank(make_track(texts), cfg);
        c.expect(r.selected == want_sel, label + ": selection mismatch " + ids_text(r.selected));
        for (size_t i = 0; i < want_scores.size(); ++i)
            c.expect(std::fabs(r.scores[i].score - want_scores[i]) <= 1e-8,
                     label + ": score table mismatch");
    };
    run_lexrank({"cats like cats", "dogs bark", "cats sleep"}, 2, 0.0, {1, 3},
                {2.315007613, 2.197224577, 2.315007613}, "lexrank-a");
    run_lexrank({"solar panels convert sunlight", "solar energy powers homes",
                 "wind turbines generate clean energy", "homes use solar energy"},
                2, 1.0, {1, 3}, {4.158883083, 2.772588722, 5.545177444, 2.772588722},
                "lexrank-b");
    run_lexrank({"music makes people happy", "music calms people", "music heals people slowly"},
                1, 0.0, {1}, {2.197224577, 1.098612289, 2.197224577}, "lexrank-c");
}

// ------------------------------------------------------------------- 8

void check_srt_round_trip(Checks& c) {
    // canonical fixtures: serialize(parse(text)) must reproduce the text
    const std::string big = kv::read_file(kSourceDir + "/tests/data/talk_370.srt");
    c.expect(serialize_srt(parse_srt(big)) == big, "370-cue fixture is not a fixed point");

    const std::vector<std::string> vocab = {"alpha", "beta", "gamma", "delta", "omega",
                                            "sigma", "kappa", "theta"};
    std::mt19937 rng(808);
    auto random_track = [&]() {
        SubtitleTrack t;
        const int n = 1 + static_cast<int>(rng() % 80);
        int id = 0;
        std::int64_t at = 0;
        for (int i = 0; i < n; ++i) {
            SubtitleCue cue;
            id += 1 + static_cast<int>(rng() % 3);  // gaps in the numbering are legal
            cue.id = id;
            at += static_cast<std::int64_t>(rng() % 4000);
            cue.start.millis = at;
            cue.end.millis = at + 200 + static_cast<std::int64_t>(rng() % 5000);
            const int words = 1 + static_cast<int>(rng() % 6);
            for (int w = 0; w < words; ++w) {
                if (w) cue.text += ' ';
                cue.text += vocab[rng() % vocab.size()];
            }
            t.cues.push_back(cue);
        }
        return t;
    };

    for (int round = 0; round < 49; ++round) {
        SubtitleTrack t = random_track();
        const std::string canonical = serialize_srt(t);
        SubtitleTrack back = parse_srt(canonical);
        bool same = back.size() == t.size();
        for (size_t i = 0; same && i < t.size(); ++i)
            same = back.cues[i].id == t.cues[i].id && back.cues[i].start == t.cues[i].start &&
                   back.cues[i].end == t.cues[i].end && back.cues[i].text == t.cues[i].text;
        c.expect(same, "canonical fixture " + std::to_string(round) + " lost a cue field");
        c.expect(serialize_srt(back) == canonical,
                 "canonical fixture " + std::to_string(round) + " is not byte-stable");
    }

    // messy fixtures: one parse must normalize; a second round trip must
    // change nothing
    for (int round = 0; round < 20; ++round) {
        SubtitleTrack t = random_track();
        const bool bom = round % 2 == 0;
        const bool crlf = round % 3 != 0;
        const int blank_run = 1 + round % 3;
        std::string messy = bom ? "\xEF\xBB\xBF" : "";
        const std::string eol = crlf ? "\r\n" : "\n";
        for (const auto& cue : t.cues) {
            messy += std::to_string(cue.id) + eol;
            messy += cue.start.to_string() + " --> " + cue.end.to_string() + eol;
            auto space = cue.text.find(' ');
            if (round % 2 == 1 && space != std::string::npos) {
                // split one caption across two physical lines
                messy += cue.text.substr(0, space) + eol + cue.text.substr(space + 1) + eol;
            } else {
                messy += cue.text + eol;
            }
            for (int b = 0; b < blank_run; ++b) messy += eol;
        }
        const std::string once = serialize_srt(parse_srt(messy));
        const std::string twice = serialize_srt(parse_srt(once));
        c.expect(once == twice, "messy fixture " + std::to_string(round) + " is not idempotent");
    }
}

// ------------------------------------------------------------------- 9

void check_silence_segmentation(Checks& c) {
    const int rate = 16000;
    auto tone_samples = [&](double seconds, double hz, AudioBuffer& buf) {
        auto n = static_cast<size_t>(seconds * rate);
        for (size_t i = 0; i < n; ++i) {
            double t = static_cast<double>(i) / rate;
            buf.samples.push_back(static_cast<std::int16_t>(
                std::lround(8000.0 * std::sin(2.0 * 3.14159265358979323846 * hz * t))));
        }
    };

    AudioBuffer two_tones;
    two_tones.sample_rate = rate;
    tone_samples(2.0, 440.0, two_tones);
    two_tones.samples.insert(two_tones.samples.end(), rate / 2, 0);
    tone_samples(2.0, 550.0, two_tones);

    SegmentationConfig cfg;
    auto silences = detect_silences(two_tones, cfg);
    c.expect(silences.size() == 1, "expected one silence span");
    if (silences.size() == 1) {
        c.expect(std::llabs(silences[0].start_ms - 2000) <= 20, "silence start off");
        c.expect(std::llabs(silences[0].end_ms - 2500) <= 20, "silence end off");
    }

    auto chunks = chunk(two_tones, cfg);
    c.expect(chunks.size() == 2, "expected two chunks");
    if (chunks.size() == 2) {
        c.expect(chunks[0].start_ms == 0 && chunks[0].end_ms == 2000, "first chunk span off");
        c.expect(chunks[1].start_ms == 2500 && chunks[1].end_ms == 4500, "second chunk span off");
        for (const auto& ch : chunks) {
            const size_t pad = static_cast<size_t>(rate);
            const size_t core =
                static_cast<size_t>((ch.end_ms - ch.start_ms) * rate / 1000);
            c.expect(ch.padded.samples.size() == core + 2 * pad, "padded length off");
            bool zeros = true;
            for (size_t i = 0; i < pad && zeros; ++i)
                zeros = ch.padded.samples[i] == 0 &&
                        ch.padded.samples[ch.padded.samples.size() - 1 - i] == 0;
            c.expect(zeros, "padding is not silent");
            // the core must be the source slice, untouched
            const size_t from = static_cast<size_t>(ch.start_ms * rate / 1000);
            bool copied = true;
            for (size_t i = 0; i < core && copied; ++i)
                copied = ch.padded.samples[pad + i] == two_tones.samples[from + i];
            c.expect(copied, "padded core differs from the source audio");
        }
    }

    AudioBuffer steady;
    steady.sample_rate = rate;
    tone_samples(14.0, 440.0, steady);
    auto capped = chunk(steady, cfg);
    c.expect(capped.size() == 3, "14 s tone should hard-cut into three chunks");
    if (capped.size() == 3) {
        c.expect(capped[0].start_ms == 0 && capped[0].end_ms == 6000, "first cap off");
        c.expect(capped[1].start_ms == 6000 && capped[1].end_ms == 12000, "second cap off");
        c.expect(capped[2].start_ms == 12000 && capped[2].end_ms == 14000, "tail chunk off");
    }
}

// ------------------------------------------------------------------ 10

void check_pipeline_determinism(Checks& c) {
    namespace fs = std::filesystem;
    const fs::path root = fs::temp_directory_path() / "vsum_acceptance" / "determinism";
    fs::remove_all(root);
    fs::create_directories(root);

    write_wav((root / "talk.wav").string(), testfx::synth_talk());
    OfflineStub stub(testfx::talk_fixtures());

    auto run_once = [&](const std::string& tag) {
        RunConfig cfg;
        cfg.media_path = (root / "talk.wav").string();
        cfg.output_dir = (root / tag).string();
        cfg.video_id = "talk";
        cfg.mode = RunMode::Weighted;
        cfg.algorithms = {kAllAlgorithms.begin(), kAllAlgorithms.end()};
        cfg.weights_path = (root / (tag + "_weights.kv")).string();
        cfg.bonus_path = kSourceDir + "/data/bonus_words.txt";
        cfg.stigma_path = kSourceDir + "/data/stigma_words.txt";
        cfg.null_path = kSourceDir + "/data/null_words.txt";
        cfg.backend = &stub;
        return run(cfg);
    };
    RunSummary first = run_once("a");
    RunSummary second = run_once("b");

    c.expect(first.n_chunks == 7, "expected seven transcribed chunks");
    c.expect(first.selected == second.selected, "selections differ between runs");

    const std::vector<std::string> files = {
        "subtitles.srt",          "luhn_selection.csv",    "lsa_selection.csv",
        "textrank_selection.csv", "lexrank_selection.csv", "edmundson_selection.csv",
        "ensemble_selection.csv", "report.kv",             "cutlist.json",
        "cut.sh",                 "summary.srt"};
    for (const auto& name : files) {
        const fs::path a = root / "a" / name;
        const fs::path b = root / "b" / name;
        if (!fs::exists(a) || !fs::exists(b)) {
            c.expect(false, name + " missing from an output directory");
            continue;
        }
        c.expect(kv::read_file(a.string()) == kv::read_file(b.string()),
                 name + " differs between runs");
    }
    c.expect(kv::read_file((root / "a_weights.kv").string()) ==
                 kv::read_file((root / "b_weights.kv").string()),
             "weight states differ between runs");
    fs::remove_all(root);
}

// ------------------------------------------------------------------ 11

void check_cutplan_integrity(Checks& c) {
    const SubtitleTrack track =
        parse_srt(kv::read_file(kSourceDir + "/tests/data/talk_370.srt"));
    std::mt19937 rng(3700);

    for (int round = 0; round < 100; ++round) {
        const int count = 1 + static_cast<int>(rng() % 150);
        std::vector<int> selected = random_selection(rng, static_cast<int>(track.size()), count);
        const auto gap = static_cast<std::int64_t>(rng() % 3000);

        CutList cut = build_cutlist(track, selected, gap);

        // quadratic oracle: merge any two spans closer than the gap
        // until nothing changes, then compare
        std::vector<Segment> spans;
        for (int id : selected) {
            const SubtitleCue* cue = track.find(id);
            spans.push_back({cue->start.millis, cue->end.millis});
        }
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < spans.size() && !changed; ++i)
                for (size_t j = 0; j < spans.size() && !changed; ++j) {
                    if (i == j) continue;
                    const auto lo = std::min(spans[i].start_ms, spans[j].start_ms);
                    const auto hi = std::max(spans[i].end_ms, spans[j].end_ms);
                    const auto width = (spans[i].end_ms - spans[i].start_ms) +
                                       (spans[j].end_ms - spans[j].start_ms);
                    if (hi - lo < width + gap) {
                        spans[i] = {lo, hi};
                        spans.erase(spans.begin() + static_cast<std::ptrdiff_t>(j));
                        changed = true;
                    }
                }
        }
        std::sort(spans.begin(), spans.end(),
                  [](const Segment& a, const Segment& b) { return a.start_ms < b.start_ms; });

        bool same = cut.segments.size() == spans.size();
        for (size_t i = 0; same && i < spans.size(); ++i)
            same = cut.segments[i].start_ms == spans[i].start_ms &&
                   cut.segments[i].end_ms == spans[i].end_ms;
        c.expect(same, "round " + std::to_string(round) + ": merge disagrees with the oracle");

        for (size_t i = 0; i < cut.segments.size(); ++i) {
            c.expect(cut.segments[i].start_ms < cut.segments[i].end_ms, "empty segment");
            if (i)
                c.expect(cut.segments[i].start_ms - cut.segments[i - 1].end_ms >= gap,
                         "adjacent segments closer than the merge gap");
        }

        SubtitleTrack retimed = retime_track(track, cut);
        const std::int64_t total = cut.total_duration_ms();
        for (size_t i = 0; i < retimed.size(); ++i) {
            const auto& cue = retimed.cues[i];
            c.expect(cue.id == static_cast<int>(i) + 1, "retimed ids are not 1..n");
            c.expect(cue.start.millis >= 0 && cue.end.millis <= total,
                     "retimed cue outside the summarized duration");
        }
    }
}

// --------------------------------------------------------------- driver

struct Criterion {
    const char* name;
    double budget_ms;
    std::function<void(Checks&)> fn;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"weight-update-step", 1.0, check_weight_update_step},
        {"weight-update-trajectory", 1.0, check_weight_update_trajectory},
        {"efficiency-arithmetic", 1000.0, check_efficiency_arithmetic},
        {"intersection-ensemble", 5000.0, check_intersection_ensemble},
        {"textrank-equivalence", 10000.0, check_textrank_equivalence},
        {"lsa-equivalence", 5000.0, check_lsa_equivalence},
        {"frequency-centroid-fixtures", 5000.0, check_frequency_centroid_fixtures},
        {"srt-round-trip", 5000.0, check_srt_round_trip},
        {"silence-segmentation", 2000.0, check_silence_segmentation},
        {"pipeline-determinism", 30000.0, check_pipeline_determinism},
        {"cutplan-integrity", 5000.0, check_cutplan_integrity},
    };

    int failed = 0;
    for (const auto& criterion : criteria) {
        Checks checks;
        std::string aborted;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criterion.fn(checks);
        } catch (const std::exception& e) {
            aborted = e.what();
        }
        const auto t1 = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

        std::string detail;
        if (!aborted.empty()) {
            detail = "exception: " + aborted;
        } else if (!checks.failures.empty()) {
            detail = checks.failures.front();
            if (checks.failures.size() > 1)
                detail += " (+" + std::to_string(checks.failures.size() - 1) + " more)";
        } else if (ms > criterion.budget_ms) {
            detail = "runtime over budget";
        }

        char line[512];
        if (detail.empty()) {
            std::snprintf(line, sizeof(line), "PASS  %-28s %9.2f ms (budget %.0f ms)",
                          criterion.name, ms, criterion.budget_ms);
        } else {
            std::snprintf(line, sizeof(line), "FAIL  %-28s %9.2f ms (budget %.0f ms): %s",
                          criterion.name, ms, criterion.budget_ms, detail.c_str());
            ++failed;
        }
        std::puts(line);
    }

    if (failed) std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
