#include "snacs/tagger.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "snacs/tsv.hpp"

namespace snacs {

namespace {

std::string candidate_key(const Label& label, ConstructionContext ctx) {
    return label.serialize() + "\t" + to_string(ctx);
}

void sort_candidates(std::vector<BaselineModel::Candidate>& candidates) {
    std::sort(candidates.begin(), candidates.end(),
              [](const BaselineModel::Candidate& a, const BaselineModel::Candidate& b) {
                  if (a.count != b.count) return a.count > b.count;
                  return candidate_key(a.label, a.ctx) < candidate_key(b.label, b.ctx);
              });
}

Label context_default(ConstructionContext ctx) {
    switch (ctx) {
        case ConstructionContext::SGenitive: return Label(Supersense::Gestalt);
        case ConstructionContext::PassiveBy: return Label(Supersense::Agent);
        case ConstructionContext::AsComparativeFirst: return Label(Supersense::Extent);
        case ConstructionContext::InfinitivalTo:
        case ConstructionContext::InfinitivalForSubject:
            return Label(SpecialLabel::OtherInfinitive);
        case ConstructionContext::None: break;
    }
    return Label(Supersense::Locus);  // unused; None is handled by the caller
}

}  // namespace

BaselineModel BaselineModel::from_counts(
    const std::map<std::string, std::map<std::string, Candidate>>& counts) {
    BaselineModel model;
    std::map<std::string, Candidate> global;
    for (const auto& [lemma, cells] : counts) {
        std::vector<Candidate> candidates;
        candidates.reserve(cells.size());
        for (const auto& [key, cell] : cells) {
            candidates.push_back(cell);
            auto& g = global.emplace(cell.label.serialize(), Candidate{cell.label, ConstructionContext::None, 0})
                          .first->second;
            g.count += cell.count;
        }
        sort_candidates(candidates);
        model.per_lemma_.emplace(lemma, std::move(candidates));
    }
    if (model.per_lemma_.empty()) {
        throw EmptyTrainingDataError("no usable (lemma, label, context) triples");
    }
    for (const auto& [key, cell] : global) model.global_.push_back(cell);
    sort_candidates(model.global_);
    return model;
}

BaselineModel train(const ExampleBank& bank) {
    std::map<std::string, std::map<std::string, BaselineModel::Candidate>> counts;
    for (const auto& entry : bank.entries()) {
        auto& cell = counts[entry.adposition][candidate_key(entry.label, entry.ctx)];
        if (cell.count == 0) cell = {entry.label, entry.ctx, 0};
        cell.count += 1;
    }
    return BaselineModel::from_counts(counts);
}

BaselineModel train(const Corpus& corpus) {
    std::map<std::string, std::map<std::string, BaselineModel::Candidate>> counts;
    for (const auto& record : corpus.records) {
        if (!record.label) continue;
        if (!validate(*record.label, record.ctx).ok()) continue;
        auto& cell = counts[record.lemma][candidate_key(*record.label, record.ctx)];
        if (cell.count == 0) cell = {*record.label, record.ctx, 0};
        cell.count += 1;
    }
    return BaselineModel::from_counts(counts);
}

const std::vector<BaselineModel::Candidate>& BaselineModel::candidates(
    const std::string& lemma) const {
    static const std::vector<Candidate> empty;
    auto it = per_lemma_.find(lemma);
    return it == per_lemma_.end() ? empty : it->second;
}

std::vector<std::string> BaselineModel::lemmas() const {
    std::vector<std::string> out;
    out.reserve(per_lemma_.size());
    for (const auto& [lemma, candidates] : per_lemma_) out.push_back(lemma);
    return out;
}

Label BaselineModel::predict(const std::string& lemma, ConstructionContext ctx) const {
    // Back off through the lemma's uses in any recorded context before
    // resorting to the per-context defaults.
    for (const auto& candidate : candidates(lemma)) {
        if (validate(candidate.label, ctx).ok()) return candidate.label;
    }
    if (ctx != ConstructionContext::None) return context_default(ctx);
    for (const auto& candidate : global_) {
        if (validate(candidate.label, ctx).ok()) return candidate.label;
    }
    // Reachable only if every training label is invalid outside its own
    // context (e.g. a bank consisting solely of as-comparative uses).
    return Label(Supersense::Locus);
}

Corpus tag_corpus(const BaselineModel& model, const Corpus& corpus) {
    Corpus tagged = corpus;
    for (auto& record : tagged.records) {
        record.label = model.predict(record.lemma, record.ctx);
    }
    return tagged;
}

std::string BaselineModel::serialize() const {
    std::ostringstream out;
    out << "LEMMA\tLABEL\tCTX\tCOUNT\n";
    for (const auto& [lemma, candidates] : per_lemma_) {
        for (const auto& c : candidates) {
            out << lemma << '\t' << c.label.serialize() << '\t' << to_string(c.ctx) << '\t'
                << c.count << '\n';
        }
    }
    return out.str();
}

BaselineModel BaselineModel::deserialize(const std::string& tsv_bytes) {
    std::map<std::string, std::map<std::string, Candidate>> counts;
    std::istringstream in(tsv_bytes);
    std::string line;
    int line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_tsv(line);
        if (!saw_header) {
            if (fields.size() != 4 || fields[0] != "LEMMA") {
                throw FormatError("model line 1: expected header LEMMA\tLABEL\tCTX\tCOUNT");
            }
            saw_header = true;
            continue;
        }
        if (fields.size() != 4) {
            throw FormatError("model line " + std::to_string(line_no) + ": expected 4 columns");
        }
        Label label = parse_label(fields[1]);
        auto ctx = try_parse_context(fields[2]);
        if (!ctx) {
            throw FormatError("model line " + std::to_string(line_no) + ": unknown context \"" +
                              fields[2] + "\"");
        }
        int count = 0;
        try {
            count = std::stoi(fields[3]);
        } catch (const std::exception&) {
            throw FormatError("model line " + std::to_string(line_no) + ": bad count");
        }
        if (count <= 0) {
            throw FormatError("model line " + std::to_string(line_no) + ": bad count");
        }
        if (!validate(label, *ctx).ok()) {
            throw ValidationError("model line " + std::to_string(line_no) +
                                  ": label fails validation in its context");
        }
        auto& cell = counts[fields[0]][candidate_key(label, *ctx)];
        if (cell.count == 0) cell = {label, *ctx, 0};
        cell.count += count;
    }
    if (!saw_header) throw FormatError("model: missing header line");
    return from_counts(counts);
}

BaselineModel BaselineModel::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open model file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return deserialize(buf.str());
}

}  // namespace snacs
