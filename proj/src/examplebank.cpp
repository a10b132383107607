#include "snacs/examplebank.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "snacs/tsv.hpp"

namespace snacs {

namespace {

// Sort key shared by attested_labels/attested_uses: count desc, then the
// canonical serialization, then the context name.
std::string use_key(const LabelUse& use) {
    return use.label.serialize() + "\t" + to_string(use.ctx);
}

}  // namespace

ExampleBank::ExampleBank(std::vector<ExampleEntry> entries) : entries_(std::move(entries)) {
    for (const auto& e : entries_) {
        LabelUse use{e.label, e.ctx};
        auto& cell = by_adposition_[e.adposition][use_key(use)];
        if (cell.second == 0) cell.first = use;
        cell.second += 1;
        if (e.label.is_construal()) {
            const Construal& c = e.label.construal();
            attested_.insert({c.role, c.function});
        }
    }
}

std::vector<std::pair<LabelUse, int>> ExampleBank::attested_uses(
    const std::string& adposition) const {
    std::vector<std::pair<LabelUse, int>> out;
    auto it = by_adposition_.find(adposition);
    if (it == by_adposition_.end()) return out;
    for (const auto& [key, cell] : it->second) {
        out.push_back(cell);
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return use_key(a.first) < use_key(b.first);
    });
    return out;
}

std::vector<std::pair<Label, int>> ExampleBank::attested_labels(
    const std::string& adposition) const {
    // Collapse uses of the same label across contexts before ordering.
    std::map<std::string, std::pair<Label, int>> merged;
    for (const auto& [use, count] : attested_uses(adposition)) {
        auto& cell = merged.emplace(use.label.serialize(), std::make_pair(use.label, 0)).first->second;
        cell.second += count;
    }
    std::vector<std::pair<Label, int>> out;
    for (const auto& [key, cell] : merged) out.push_back(cell);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first.serialize() < b.first.serialize();
    });
    return out;
}

std::vector<std::string> ExampleBank::adpositions() const {
    std::vector<std::string> out;
    out.reserve(by_adposition_.size());
    for (const auto& [lemma, uses] : by_adposition_) out.push_back(lemma);
    return out;
}

ExampleBank load_bank(const std::string& tsv_bytes) {
    std::vector<ExampleEntry> entries;
    int line_no = 0;
    bool saw_header = false;
    std::istringstream in(tsv_bytes);
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_tsv(line);
        if (!saw_header) {
            if (fields.size() != 5 || fields[0] != "SENTENCE") {
                throw FormatError("example bank line 1: expected header "
                                  "SENTENCE\tADPOSITION\tLABEL\tCTX\tCITATION");
            }
            saw_header = true;
            continue;
        }
        if (fields.size() != 5) {
            throw FormatError("example bank line " + std::to_string(line_no) +
                              ": expected 5 columns, got " + std::to_string(fields.size()));
        }
        ExampleEntry entry{fields[0], fields[1], Label(Supersense::Locus),
                           ConstructionContext::None, fields[4]};
        try {
            entry.label = parse_label(fields[2]);
        } catch (const std::runtime_error& e) {
            throw FormatError("example bank line " + std::to_string(line_no) + ": " + e.what());
        }
        auto ctx = try_parse_context(fields[3]);
        if (!ctx) {
            throw FormatError("example bank line " + std::to_string(line_no) +
                              ": unknown context \"" + fields[3] + "\"");
        }
        entry.ctx = *ctx;
        ValidationReport report = validate(entry.label, entry.ctx);
        if (!report.ok()) {
            // A violating entry means the transcription itself is wrong.
            throw ValidationError("example bank line " + std::to_string(line_no) +
                                  ": entry fails validation (" +
                                  std::string(to_string(report.violations.front().code)) + ": " +
                                  report.violations.front().message + ")");
        }
        entries.push_back(std::move(entry));
    }
    if (!saw_header) throw FormatError("example bank: missing header line");
    return ExampleBank(std::move(entries));
}

ExampleBank load_bank_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open example bank file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_bank(buf.str());
}

std::string serialize_bank(const ExampleBank& bank) {
    std::ostringstream out;
    out << "SENTENCE\tADPOSITION\tLABEL\tCTX\tCITATION\n";
    for (const auto& e : bank.entries()) {
        out << e.sentence << '\t' << e.adposition << '\t' << e.label.serialize() << '\t'
            << to_string(e.ctx) << '\t' << e.citation << '\n';
    }
    return out.str();
}

}  // namespace snacs
