#include "snacs/metrics.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>
#include <tuple>
#include <unordered_map>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace snacs {

namespace {

// Labels are encoded as small integers so the per-span tally is pure
// arithmetic: 0..2499 construals (role*50+func), 2500..2503 specials,
// -1 an unannotated record.
constexpr int kAbsentKey = -1;
constexpr int kSpecialBase = kSupersenseCount * kSupersenseCount;

int label_key(const std::optional<Label>& label) {
    if (!label) return kAbsentKey;
    if (label->is_special()) return kSpecialBase + static_cast<int>(label->special());
    const Construal& c = label->construal();
    return static_cast<int>(c.role) * kSupersenseCount + static_cast<int>(c.function);
}

std::string key_serialization(int key) {
    if (key == kAbsentKey) return "_";
    if (key >= kSpecialBase) {
        return std::string(code(static_cast<SpecialLabel>(key - kSpecialBase)));
    }
    return Label(Construal{static_cast<Supersense>(key / kSupersenseCount),
                           static_cast<Supersense>(key % kSupersenseCount)})
        .serialize();
}

// Component ids live in disjoint ranges: senses 0..49, specials 10000+.
int role_id(int key) {
    if (key == kAbsentKey) return kAbsentKey;
    if (key >= kSpecialBase) return 10000 + key;
    return key / kSupersenseCount;
}

int func_id(int key) {
    if (key == kAbsentKey) return kAbsentKey;
    if (key >= kSpecialBase) return 10000 + key;
    return key % kSupersenseCount;
}

const std::array<std::array<double, kSupersenseCount>, kSupersenseCount>& wp_table() {
    static const auto table = [] {
        std::array<std::array<double, kSupersenseCount>, kSupersenseCount> t{};
        for (Supersense a : all_supersenses()) {
            for (Supersense b : all_supersenses()) {
                t[static_cast<int>(a)][static_cast<int>(b)] = wu_palmer(a, b);
            }
        }
        return t;
    }();
    return table;
}

double component_wu_palmer(int a, int b) {
    if (a == kAbsentKey || b == kAbsentKey) return 0.0;
    bool a_special = a >= 10000;
    bool b_special = b >= 10000;
    if (a_special || b_special) return (a == b) ? 1.0 : 0.0;
    return wp_table()[a][b];
}

struct Tally {
    long long matched = 0;
    long long role_hits = 0;
    long long func_hits = 0;
    long long full_hits = 0;
    double role_wp_sum = 0.0;
    double func_wp_sum = 0.0;
    std::map<std::pair<int, int>, long long> confusion;

    void add(int gold_key, int pred_key) {
        ++matched;
        int gr = role_id(gold_key), pr = role_id(pred_key);
        int gf = func_id(gold_key), pf = func_id(pred_key);
        if (gr != kAbsentKey && gr == pr) ++role_hits;
        if (gf != kAbsentKey && gf == pf) ++func_hits;
        if (gold_key != kAbsentKey && gold_key == pred_key) ++full_hits;
        role_wp_sum += component_wu_palmer(gr, pr);
        func_wp_sum += component_wu_palmer(gf, pf);
        ++confusion[{gold_key, pred_key}];
    }

    void merge(const Tally& other) {
        matched += other.matched;
        role_hits += other.role_hits;
        func_hits += other.func_hits;
        full_hits += other.full_hits;
        role_wp_sum += other.role_wp_sum;
        func_wp_sum += other.func_wp_sum;
        for (const auto& [key, count] : other.confusion) confusion[key] += count;
    }
};

void check_sentence_inventories(const Corpus& gold, const Corpus& pred) {
    std::map<std::string, size_t> gold_sentences;
    for (const auto& s : gold.sentences) gold_sentences[s.id] = s.tokens.size();
    std::map<std::string, size_t> pred_sentences;
    for (const auto& s : pred.sentences) pred_sentences[s.id] = s.tokens.size();
    if (gold_sentences != pred_sentences) {
        throw CorpusMismatchError("gold and predicted corpora disagree on sentence ids "
                                  "or token counts");
    }
}

struct SpanKey {
    int start;
    int end;
    int key;  // encoded label
};

struct SentenceBucket {
    std::vector<SpanKey> gold;
    std::vector<SpanKey> pred;
};

// Matches the two span lists of one sentence by exact (start, end) and feeds
// the pairs into the tally.
void tally_sentence(SentenceBucket& bucket, Tally& tally) {
    auto by_span = [](const SpanKey& a, const SpanKey& b) {
        return std::tie(a.start, a.end) < std::tie(b.start, b.end);
    };
    std::sort(bucket.gold.begin(), bucket.gold.end(), by_span);
    std::sort(bucket.pred.begin(), bucket.pred.end(), by_span);
    size_t i = 0, j = 0;
    while (i < bucket.gold.size() && j < bucket.pred.size()) {
        auto g = std::tie(bucket.gold[i].start, bucket.gold[i].end);
        auto p = std::tie(bucket.pred[j].start, bucket.pred[j].end);
        if (g < p) {
            ++i;
        } else if (p < g) {
            ++j;
        } else {
            tally.add(bucket.gold[i].key, bucket.pred[j].key);
            ++i;
            ++j;
        }
    }
}

ScoreReport finish(const Corpus& gold, const Corpus& pred, const Tally& tally) {
    ScoreReport report;
    report.n_gold = static_cast<long long>(gold.records.size());
    report.n_pred = static_cast<long long>(pred.records.size());
    report.n_matched_spans = tally.matched;

    auto ratio = [](long long hits, long long total) {
        return total == 0 ? 1.0 : static_cast<double>(hits) / static_cast<double>(total);
    };
    report.role_acc = ratio(tally.role_hits, tally.matched);
    report.func_acc = ratio(tally.func_hits, tally.matched);
    report.full_acc = ratio(tally.full_hits, tally.matched);
    report.role_wp =
        tally.matched == 0 ? 1.0 : tally.role_wp_sum / static_cast<double>(tally.matched);
    report.func_wp =
        tally.matched == 0 ? 1.0 : tally.func_wp_sum / static_cast<double>(tally.matched);

    report.ident_p = report.n_pred == 0 ? (report.n_gold == 0 ? 1.0 : 0.0)
                                        : static_cast<double>(tally.matched) / report.n_pred;
    report.ident_r = report.n_gold == 0 ? (report.n_pred == 0 ? 1.0 : 0.0)
                                        : static_cast<double>(tally.matched) / report.n_gold;
    report.ident_f = (report.ident_p + report.ident_r) == 0.0
                         ? 0.0
                         : 2.0 * report.ident_p * report.ident_r /
                               (report.ident_p + report.ident_r);

    for (const auto& [key, count] : tally.confusion) {
        report.confusion[{key_serialization(key.first), key_serialization(key.second)}] +=
            count;
    }
    return report;
}

}  // namespace

// Reference implementation: one global span index, strings as keys.
ScoreReport score_serial(const Corpus& gold, const Corpus& pred) {
    check_sentence_inventories(gold, pred);
    std::map<std::tuple<std::string, int, int>, const AnnotationRecord*> pred_index;
    for (const auto& r : pred.records) {
        pred_index[{r.sent_id, r.start, r.end}] = &r;
    }
    Tally tally;
    for (const auto& r : gold.records) {
        auto it = pred_index.find({r.sent_id, r.start, r.end});
        if (it == pred_index.end()) continue;
        tally.add(label_key(r.label), label_key(it->second->label));
    }
    return finish(gold, pred, tally);
}

// Parallel kernel: records are bucketed per sentence, sentences are scored
// independently across threads, and the partial tallies merge into the same
// result as the serial reference.
ScoreReport score(const Corpus& gold, const Corpus& pred) {
    check_sentence_inventories(gold, pred);

    std::unordered_map<std::string, size_t> bucket_of;
    std::vector<SentenceBucket> buckets;
    bucket_of.reserve(gold.sentences.size() * 2);
    auto bucket_for = [&](const std::string& sent_id) -> SentenceBucket& {
        auto [it, inserted] = bucket_of.try_emplace(sent_id, buckets.size());
        if (inserted) buckets.emplace_back();
        return buckets[it->second];
    };
    for (const auto& r : gold.records) {
        bucket_for(r.sent_id).gold.push_back({r.start, r.end, label_key(r.label)});
    }
    for (const auto& r : pred.records) {
        bucket_for(r.sent_id).pred.push_back({r.start, r.end, label_key(r.label)});
    }

    const auto n = static_cast<long long>(buckets.size());
#ifdef _OPENMP
    std::vector<Tally> partial(static_cast<size_t>(omp_get_max_threads()));
#pragma omp parallel
    {
        Tally& local = partial[static_cast<size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
        for (long long i = 0; i < n; ++i) {
            tally_sentence(buckets[i], local);
        }
    }
    Tally tally;
    for (const auto& part : partial) tally.merge(part);
#else
    Tally tally;
    for (long long i = 0; i < n; ++i) {
        tally_sentence(buckets[i], tally);
    }
#endif
    return finish(gold, pred, tally);
}

namespace {

std::string fixed6(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

}  // namespace

std::string ScoreReport::to_machine_string() const {
    std::ostringstream out;
    out << "n_gold\t" << n_gold << '\n';
    out << "n_pred\t" << n_pred << '\n';
    out << "n_matched_spans\t" << n_matched_spans << '\n';
    out << "ident_p\t" << fixed6(ident_p) << '\n';
    out << "ident_r\t" << fixed6(ident_r) << '\n';
    out << "ident_f\t" << fixed6(ident_f) << '\n';
    out << "role_acc\t" << fixed6(role_acc) << '\n';
    out << "func_acc\t" << fixed6(func_acc) << '\n';
    out << "full_acc\t" << fixed6(full_acc) << '\n';
    out << "role_wp\t" << fixed6(role_wp) << '\n';
    out << "func_wp\t" << fixed6(func_wp) << '\n';
    for (const auto& [key, count] : confusion) {
        out << "confusion\t" << key.first << '\t' << key.second << '\t' << count << '\n';
    }
    return out.str();
}

std::string ScoreReport::to_table_string() const {
    std::ostringstream out;
    out << "spans    gold " << n_gold << ", pred " << n_pred << ", matched "
        << n_matched_spans << '\n';
    out << "ident    P " << fixed6(ident_p) << "  R " << fixed6(ident_r) << "  F "
        << fixed6(ident_f) << '\n';
    out << "acc      role " << fixed6(role_acc) << "  func " << fixed6(func_acc)
        << "  full " << fixed6(full_acc) << '\n';
    out << "wupalmer role " << fixed6(role_wp) << "  func " << fixed6(func_wp) << '\n';
    long long mistakes = 0;
    for (const auto& [key, count] : confusion) {
        if (key.first != key.second) mistakes += count;
    }
    out << "confusions (" << mistakes << " mismatched spans)\n";
    for (const auto& [key, count] : confusion) {
        if (key.first == key.second) continue;
        out << "  " << key.first << " -> " << key.second << "  x" << count << '\n';
    }
    return out.str();
}

}  // namespace snacs
