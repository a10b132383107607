#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "snacs/construal.hpp"

namespace snacs {

// One annotated usage transcribed into the bank fixture.
struct ExampleEntry {
    std::string sentence;
    std::string adposition;  // lemma; multiword joined by "_"
    Label label;
    ConstructionContext ctx;
    std::string citation;
};

struct LabelUse {
    Label label = Label(Supersense::Locus);
    ConstructionContext ctx = ConstructionContext::None;
    friend bool operator==(const LabelUse&, const LabelUse&) = default;
};

// Immutable after load; indexes are derived from the entry list.
class ExampleBank {
public:
    explicit ExampleBank(std::vector<ExampleEntry> entries);

    const std::vector<ExampleEntry>& entries() const { return entries_; }

    // Attested (role, function) pairs across all construal entries.
    const AttestedSet& attested() const { return attested_; }

    // Labels seen for an adposition, ordered by descending count and then by
    // ascending canonical serialization (ctx breaks remaining ties).
    // Unknown adpositions yield an empty list.
    std::vector<std::pair<Label, int>> attested_labels(const std::string& adposition) const;

    // Same ordering, but retaining the recorded context of each use.
    std::vector<std::pair<LabelUse, int>> attested_uses(const std::string& adposition) const;

    std::vector<std::string> adpositions() const;

private:
    std::vector<ExampleEntry> entries_;
    std::map<std::string, std::map<std::string, std::pair<LabelUse, int>>> by_adposition_;
    AttestedSet attested_;
};

// Parses the bank TSV (columns SENTENCE, ADPOSITION, LABEL, CTX, CITATION;
// header required). Throws FormatError for malformed rows and ValidationError
// for entries whose label fails validation in the recorded context.
ExampleBank load_bank(const std::string& tsv_bytes);
ExampleBank load_bank_file(const std::string& path);

std::string serialize_bank(const ExampleBank& bank);

}  // namespace snacs
