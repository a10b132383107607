#pragma once

#include <map>
#include <string>

#include "snacs/corpus.hpp"

namespace snacs {

// Comparison of predicted against gold annotations. Means over matched spans
// are vacuously 1.0 when no span matches, so a corpus always scores perfectly
// against itself.
struct ScoreReport {
    long long n_gold = 0;
    long long n_pred = 0;
    long long n_matched_spans = 0;

    double ident_p = 1.0;
    double ident_r = 1.0;
    double ident_f = 1.0;

    double role_acc = 1.0;
    double func_acc = 1.0;
    double full_acc = 1.0;

    double role_wp = 1.0;  // mean Wu-Palmer over matched spans
    double func_wp = 1.0;

    // (gold serialization, pred serialization) -> count over matched spans
    std::map<std::pair<std::string, std::string>, long long> confusion;

    // Fixed key order, then confusion rows; byte-stable.
    std::string to_machine_string() const;
    std::string to_table_string() const;
};

// Exact-span matching on (sent_id, start, end). Throws CorpusMismatchError
// when the two corpora disagree on sentence ids or token counts.
// score splits the matched spans across threads when OpenMP is enabled and
// merges deterministically; score_serial is the reference implementation.
ScoreReport score(const Corpus& gold, const Corpus& pred);
ScoreReport score_serial(const Corpus& gold, const Corpus& pred);

}  // namespace snacs
