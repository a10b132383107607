#pragma once

#include <map>
#include <string>
#include <vector>

#include "snacs/corpus.hpp"
#include "snacs/examplebank.hpp"

namespace snacs {

// Most-frequent-label baseline with construction-context overrides.
// Candidate lists are ordered by descending count, then ascending canonical
// label serialization, then context name, so predictions are reproducible.
class BaselineModel {
public:
    struct Candidate {
        Label label = Label(Supersense::Locus);
        ConstructionContext ctx = ConstructionContext::None;
        int count = 0;
    };

    // Highest-ranked candidate for the lemma whose label is valid in `ctx`;
    // falls back to the per-context default, then to the global most frequent
    // label. The result always passes validation in `ctx`.
    Label predict(const std::string& lemma, ConstructionContext ctx) const;

    const std::vector<Candidate>& candidates(const std::string& lemma) const;
    const std::vector<Candidate>& global_ranking() const { return global_; }
    std::vector<std::string> lemmas() const;

    // TSV with columns LEMMA, LABEL, CTX, COUNT (header required).
    std::string serialize() const;
    static BaselineModel deserialize(const std::string& tsv_bytes);
    static BaselineModel load_file(const std::string& path);

    friend BaselineModel train(const ExampleBank& bank);
    friend BaselineModel train(const Corpus& corpus);

private:
    static BaselineModel from_counts(
        const std::map<std::string, std::map<std::string, Candidate>>& counts);

    std::map<std::string, std::vector<Candidate>> per_lemma_;
    std::vector<Candidate> global_;
};

// Count (lemma, label, ctx) triples. Records without a label, and label/ctx
// pairs that fail validation, are skipped. Throws EmptyTrainingDataError when
// nothing usable remains.
BaselineModel train(const ExampleBank& bank);
BaselineModel train(const Corpus& corpus);

// Replaces every record's label with the model's prediction for its lemma and
// context.
Corpus tag_corpus(const BaselineModel& model, const Corpus& corpus);

}  // namespace snacs
