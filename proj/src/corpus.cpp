#include "snacs/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "snacs/tsv.hpp"

namespace snacs {

namespace {

constexpr std::string_view kSentHeader = "# sent_id = ";
constexpr std::string_view kAnnotationsHeader = "# annotations";
constexpr std::string_view kPlaceholder = "_";

struct LineReader {
    std::istringstream in;
    int line_no = 0;

    explicit LineReader(const std::string& bytes) : in(bytes) {}

    bool next(std::string& line) {
        if (!std::getline(in, line)) return false;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return true;
    }
};

[[noreturn]] void format_error(int line, const std::string& message) {
    throw FormatError("line " + std::to_string(line) + ": " + message);
}

int parse_index(const std::string& text, int line, const char* what) {
    if (text.empty() || text.size() > 9 ||
        text.find_first_not_of("0123456789") != std::string::npos) {
        format_error(line, std::string("bad ") + what + " \"" + text + "\"");
    }
    return std::stoi(text);
}

std::string span_form(const Sentence& sentence, int start, int end) {
    std::string form;
    for (int i = start; i <= end; ++i) {
        if (!form.empty()) form += ' ';
        form += sentence.tokens[i - 1];
    }
    return form;
}

}  // namespace

const Sentence* Corpus::find_sentence(const std::string& id) const {
    for (const auto& s : sentences) {
        if (s.id == id) return &s;
    }
    return nullptr;
}

std::pair<Corpus, std::vector<Diagnostic>> parse_corpus(const std::string& bytes,
                                                        ParseMode mode) {
    Corpus corpus;
    std::vector<Diagnostic> diagnostics;
    std::map<std::string, size_t> sentence_index;
    // (sent_id, token) -> occupied, for overlap detection
    std::map<std::pair<std::string, int>, bool> occupied;

    LineReader reader(bytes);
    std::string line;
    bool in_annotations = false;
    Sentence pending;
    bool have_pending = false;

    auto flush_sentence = [&] {
        if (!have_pending) return;
        if (sentence_index.count(pending.id)) {
            format_error(reader.line_no, "duplicate sent_id \"" + pending.id + "\"");
        }
        sentence_index[pending.id] = corpus.sentences.size();
        corpus.sentences.push_back(std::move(pending));
        pending = Sentence{};
        have_pending = false;
    };

    while (reader.next(line)) {
        if (line.empty()) {
            flush_sentence();
            continue;
        }
        if (line.rfind(kSentHeader, 0) == 0) {
            flush_sentence();
            pending.id = line.substr(kSentHeader.size());
            if (pending.id.empty()) format_error(reader.line_no, "empty sent_id");
            pending.tokens.clear();
            have_pending = true;
            in_annotations = false;
            continue;
        }
        if (line == kAnnotationsHeader) {
            flush_sentence();
            in_annotations = true;
            continue;
        }
        if (!in_annotations) {
            if (!have_pending) {
                format_error(reader.line_no, "token line outside a sentence block");
            }
            auto fields = split_tsv(line);
            if (fields.size() != 2) {
                format_error(reader.line_no, "token line must be <index>\\t<form>");
            }
            int index = parse_index(fields[0], reader.line_no, "token index");
            if (index != static_cast<int>(pending.tokens.size()) + 1) {
                format_error(reader.line_no, "token indices must count up from 1");
            }
            if (fields[1].empty()) format_error(reader.line_no, "empty token form");
            pending.tokens.push_back(fields[1]);
            continue;
        }

        // Annotation record line.
        auto fields = split_tsv(line);
        if (fields.size() != 6) {
            format_error(reader.line_no, "annotation record must have 6 columns, got " +
                                             std::to_string(fields.size()));
        }
        AnnotationRecord record;
        record.sent_id = fields[0];
        record.line = reader.line_no;
        auto it = sentence_index.find(record.sent_id);
        if (it == sentence_index.end()) {
            format_error(reader.line_no, "unknown sent_id \"" + record.sent_id + "\"");
        }
        const Sentence& sentence = corpus.sentences[it->second];

        auto colon = fields[1].find(':');
        if (colon == std::string::npos) {
            format_error(reader.line_no, "span must be <start>:<end>");
        }
        record.start = parse_index(fields[1].substr(0, colon), reader.line_no, "span start");
        record.end = parse_index(fields[1].substr(colon + 1), reader.line_no, "span end");
        if (record.start < 1 || record.end < record.start ||
            record.end > static_cast<int>(sentence.tokens.size())) {
            format_error(reader.line_no, "span " + fields[1] + " does not fit sentence \"" +
                                             record.sent_id + "\"");
        }
        for (int t = record.start; t <= record.end; ++t) {
            auto key = std::make_pair(record.sent_id, t);
            if (occupied[key]) {
                format_error(reader.line_no,
                             "overlapping span in sentence \"" + record.sent_id + "\"");
            }
            occupied[key] = true;
        }
        record.form = span_form(sentence, record.start, record.end);
        record.lemma = fields[2];
        if (record.lemma.empty()) format_error(reader.line_no, "empty lemma");

        const std::string& role_col = fields[3];
        const std::string& func_col = fields[4];
        if (role_col.empty() || func_col.empty()) {
            format_error(reader.line_no, "empty label column");
        }
        auto ctx = try_parse_context(fields[5]);
        if (!ctx) {
            format_error(reader.line_no, "unknown construction context \"" + fields[5] + "\"");
        }
        record.ctx = *ctx;

        bool keep = true;
        if (role_col == kPlaceholder || func_col == kPlaceholder) {
            if (role_col != func_col) {
                format_error(reader.line_no, "placeholder \"_\" must fill both label columns");
            }
            record.label = std::nullopt;
        } else if (role_col.front() == '`' || func_col.front() == '`') {
            auto special = try_parse_special(role_col);
            if (!special || role_col != func_col) {
                format_error(reader.line_no,
                             "special code must be identical in both label columns");
            }
            record.label = Label(*special);
        } else {
            auto parse_side = [&](const std::string& text) -> std::optional<Supersense> {
                if (text.rfind("p.", 0) != 0) {
                    format_error(reader.line_no,
                                 "label column must be p.<Name>, a backtick code, or \"_\"");
                }
                return try_parse_supersense(text.substr(2));
            };
            auto role = parse_side(role_col);
            auto func = parse_side(func_col);
            if (!role || !func) {
                diagnostics.push_back({reader.line_no, ErrorCode::E_UNKNOWN_LABEL,
                                       "unknown supersense in \"" + role_col + "\" / \"" +
                                           func_col + "\""});
                keep = false;
            } else {
                record.label = Label(Construal{*role, *func});
            }
        }
        if (keep) corpus.records.push_back(std::move(record));
    }
    flush_sentence();

    // Validation pass over everything that parsed.
    auto validation = validate_corpus(corpus);
    diagnostics.insert(diagnostics.end(), validation.begin(), validation.end());
    std::stable_sort(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& a, const Diagnostic& b) { return a.line < b.line; });
    if (mode == ParseMode::Strict && !diagnostics.empty()) {
        const Diagnostic& first = diagnostics.front();
        throw ValidationError("line " + std::to_string(first.line) + ": " +
                              std::string(to_string(first.code)) + " " + first.message);
    }
    return {std::move(corpus), std::move(diagnostics)};
}

std::pair<Corpus, std::vector<Diagnostic>> parse_corpus_file(const std::string& path,
                                                             ParseMode mode) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open corpus file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_corpus(buf.str(), mode);
}

std::string serialize_corpus(const Corpus& corpus) {
    std::ostringstream out;
    for (const auto& sentence : corpus.sentences) {
        out << kSentHeader << sentence.id << '\n';
        for (size_t i = 0; i < sentence.tokens.size(); ++i) {
            out << (i + 1) << '\t' << sentence.tokens[i] << '\n';
        }
        out << '\n';
    }
    out << kAnnotationsHeader << '\n';
    for (const auto& record : corpus.records) {
        std::string role_col = "_";
        std::string func_col = "_";
        if (record.label) {
            if (record.label->is_special()) {
                role_col = func_col = std::string(code(record.label->special()));
            } else {
                const Construal& c = record.label->construal();
                role_col = "p." + std::string(name(c.role));
                func_col = "p." + std::string(name(c.function));
            }
        }
        out << record.sent_id << '\t' << record.start << ':' << record.end << '\t'
            << record.lemma << '\t' << role_col << '\t' << func_col << '\t'
            << to_string(record.ctx) << '\n';
    }
    return out.str();
}

std::vector<Diagnostic> validate_corpus_serial(const Corpus& corpus) {
    std::vector<Diagnostic> out;
    for (const auto& record : corpus.records) {
        if (!record.label) continue;
        ValidationReport report = validate(*record.label, record.ctx);
        for (const auto& v : report.violations) {
            out.push_back({record.line, v.code, v.message});
        }
    }
    return out;
}

std::vector<Diagnostic> validate_corpus(const Corpus& corpus) {
    const auto n = static_cast<long long>(corpus.records.size());
#ifdef _OPENMP
    // schedule(static) assigns contiguous index ranges in thread order, so
    // concatenating the per-thread slices preserves record order.
    std::vector<std::vector<Diagnostic>> per_thread(
        static_cast<size_t>(omp_get_max_threads()));
#pragma omp parallel
    {
        auto& local = per_thread[static_cast<size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
        for (long long i = 0; i < n; ++i) {
            const auto& record = corpus.records[i];
            if (!record.label) continue;
            for (const auto& v : validate(*record.label, record.ctx).violations) {
                local.push_back({record.line, v.code, v.message});
            }
        }
    }
    std::vector<Diagnostic> out;
    for (auto& slice : per_thread) {
        out.insert(out.end(), slice.begin(), slice.end());
    }
    return out;
#else
    (void)n;
    return validate_corpus_serial(corpus);
#endif
}

}  // namespace snacs
