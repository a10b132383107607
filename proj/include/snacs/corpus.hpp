#pragma once

#include <optional>
#include <string>
#include <vector>

#include "snacs/construal.hpp"

namespace snacs {

struct Sentence {
    std::string id;
    std::vector<std::string> tokens;
    friend bool operator==(const Sentence&, const Sentence&) = default;
};

// One annotated adposition/possessive token occurrence. An absent label marks
// an unannotated target ("_" in both label columns), the input form consumed
// by the tagger.
struct AnnotationRecord {
    std::string sent_id;
    int start = 0;  // 1-based, inclusive
    int end = 0;
    std::string form;   // surface tokens joined by spaces; derived, not serialized
    std::string lemma;  // underscore-joined if multiword
    std::optional<Label> label;
    ConstructionContext ctx = ConstructionContext::None;
    int line = 0;  // source line when parsed from a file, else 0

    friend bool operator==(const AnnotationRecord& a, const AnnotationRecord& b) {
        return a.sent_id == b.sent_id && a.start == b.start && a.end == b.end &&
               a.form == b.form && a.lemma == b.lemma && a.label == b.label && a.ctx == b.ctx;
    }
};

struct Corpus {
    std::vector<Sentence> sentences;
    std::vector<AnnotationRecord> records;

    const Sentence* find_sentence(const std::string& id) const;
    friend bool operator==(const Corpus&, const Corpus&) = default;
};

enum class ParseMode { Strict, Lenient };

struct Diagnostic {
    int line = 0;
    ErrorCode code;
    std::string message;
    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

// Parses the two-block corpus format. Structural problems (column counts, bad
// spans, unknown sentence ids, duplicate blocks) throw FormatError in both
// modes. Label/validation problems throw ValidationError at the first offender
// in strict mode; in lenient mode they are returned as diagnostics in file
// order, and records whose label cannot be parsed are dropped.
std::pair<Corpus, std::vector<Diagnostic>> parse_corpus(const std::string& bytes,
                                                        ParseMode mode);
std::pair<Corpus, std::vector<Diagnostic>> parse_corpus_file(const std::string& path,
                                                             ParseMode mode);

// Byte-stable serialization; parse_corpus(serialize_corpus(c), Strict) == c.
std::string serialize_corpus(const Corpus& corpus);

// Per-record validation over a loaded corpus, reported in record order.
// validate_corpus partitions the work across threads when OpenMP is enabled;
// validate_corpus_serial is the reference implementation.
std::vector<Diagnostic> validate_corpus(const Corpus& corpus);
std::vector<Diagnostic> validate_corpus_serial(const Corpus& corpus);

}  // namespace snacs
