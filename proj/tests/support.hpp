#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "snacs/corpus.hpp"
#include "snacs/examplebank.hpp"

namespace snacs::testing {

inline std::string data_path(const std::string& name) {
    return std::string(SNACS_DATA_DIR) + "/" + name;
}

inline const ExampleBank& shipped_bank() {
    static const ExampleBank bank = load_bank_file(data_path("example_bank.tsv"));
    return bank;
}

// All construals valid in the plain context, plus the special labels.
inline const std::vector<Label>& valid_label_pool() {
    static const std::vector<Label> pool = [] {
        std::vector<Label> labels;
        for (Supersense role : all_supersenses()) {
            for (Supersense func : all_supersenses()) {
                Label label(Construal{role, func});
                if (validate(label, ConstructionContext::None).ok()) labels.push_back(label);
            }
        }
        labels.emplace_back(SpecialLabel::Discourse);
        labels.emplace_back(SpecialLabel::Coordinator);
        labels.emplace_back(SpecialLabel::OpaquePossessive);
        return labels;
    }();
    return pool;
}

inline Corpus make_random_corpus(std::mt19937& rng, int n_sentences,
                                 int max_records_per_sentence) {
    const auto& pool = valid_label_pool();
    std::uniform_int_distribution<size_t> pick_label(0, pool.size() - 1);
    std::uniform_int_distribution<int> pick_count(1, max_records_per_sentence);

    Corpus corpus;
    for (int i = 0; i < n_sentences; ++i) {
        Sentence s;
        s.id = "s" + std::to_string(i + 1);
        int n_records = pick_count(rng);
        for (int t = 0; t < n_records; ++t) {
            s.tokens.push_back("w" + std::to_string(t + 1));
        }
        for (int t = 0; t < n_records; ++t) {
            AnnotationRecord r;
            r.sent_id = s.id;
            r.start = r.end = t + 1;
            r.form = r.lemma = s.tokens[t];
            r.label = pool[pick_label(rng)];
            corpus.records.push_back(std::move(r));
        }
        corpus.sentences.push_back(std::move(s));
    }
    return corpus;
}

// One single-token sentence per bank entry; used for leave-one-out scoring.
inline Corpus bank_pseudo_corpus(const ExampleBank& bank) {
    Corpus corpus;
    char buf[16];
    for (size_t i = 0; i < bank.entries().size(); ++i) {
        const auto& entry = bank.entries()[i];
        std::snprintf(buf, sizeof(buf), "e%04zu", i + 1);
        Sentence s{buf, {entry.adposition}};
        corpus.sentences.push_back(s);
        AnnotationRecord r;
        r.sent_id = s.id;
        r.start = r.end = 1;
        r.form = r.lemma = entry.adposition;
        r.label = entry.label;
        r.ctx = entry.ctx;
        corpus.records.push_back(std::move(r));
    }
    return corpus;
}

inline std::vector<std::string> whitespace_tokens(const std::string& sentence) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : sentence) {
        if (c == ' ') {
            if (!current.empty()) tokens.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

// Builds a real-token corpus from bank sentences whose lemmas resolve to
// whitespace tokens; repeated lemmas take successive occurrences. Sentences
// that cannot be resolved are skipped.
inline Corpus build_sample_corpus(const ExampleBank& bank, size_t n_sentences) {
    std::vector<std::string> order;
    std::map<std::string, std::vector<const ExampleEntry*>> grouped;
    for (const auto& entry : bank.entries()) {
        if (!grouped.count(entry.sentence)) order.push_back(entry.sentence);
        grouped[entry.sentence].push_back(&entry);
    }

    Corpus corpus;
    for (const auto& sentence_text : order) {
        if (corpus.sentences.size() >= n_sentences) break;
        auto tokens = whitespace_tokens(sentence_text);
        std::map<std::string, int> next_occurrence;
        std::vector<AnnotationRecord> records;
        bool resolvable = true;
        for (const ExampleEntry* entry : grouped[sentence_text]) {
            int skip = next_occurrence[entry->adposition]++;
            int position = 0;
            for (size_t t = 0; t < tokens.size(); ++t) {
                if (tokens[t] == entry->adposition && skip-- == 0) {
                    position = static_cast<int>(t) + 1;
                    break;
                }
            }
            if (position == 0) {
                resolvable = false;
                break;
            }
            AnnotationRecord r;
            r.start = r.end = position;
            r.form = r.lemma = entry->adposition;
            r.label = entry->label;
            r.ctx = entry->ctx;
            records.push_back(std::move(r));
        }
        if (!resolvable || records.empty()) continue;
        char buf[16];
        std::snprintf(buf, sizeof(buf), "s%03zu", corpus.sentences.size() + 1);
        for (auto& r : records) {
            r.sent_id = buf;
            corpus.records.push_back(std::move(r));
        }
        corpus.sentences.push_back(Sentence{buf, tokens});
    }
    return corpus;
}

}  // namespace snacs::testing
