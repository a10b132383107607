#include <doctest.h>

#include "snacs/metrics.hpp"
#include "snacs/tagger.hpp"
#include "support.hpp"

using namespace snacs;
using snacs::testing::shipped_bank;

namespace {

ExampleBank mini_bank(const std::string& rows) {
    return load_bank("SENTENCE\tADPOSITION\tLABEL\tCTX\tCITATION\n" + rows);
}

}  // namespace

TEST_CASE("train counts and ranks per lemma") {
    ExampleBank bank = mini_bank(
        "s1\tago\tp.Time~>p.Interval\tNone\tx\n"
        "s2\tago\tp.Time~>p.Interval\tNone\tx\n"
        "s3\tago\tp.Interval\tNone\tx\n");
    BaselineModel model = train(bank);
    auto candidates = model.candidates("ago");
    REQUIRE(candidates.size() == 2);
    CHECK(candidates[0].label ==
          Label(Construal{Supersense::Time, Supersense::Interval}));
    CHECK(candidates[0].count == 2);
    CHECK(model.predict("ago", ConstructionContext::None) == candidates[0].label);
}

TEST_CASE("ties break on the canonical serialization") {
    ExampleBank bank = mini_bank(
        "s1\tat\tp.Locus\tNone\tx\n"
        "s2\tat\tp.Direction\tNone\tx\n");
    BaselineModel model = train(bank);
    // "p.Direction" < "p.Locus"
    CHECK(model.predict("at", ConstructionContext::None) == Label(Supersense::Direction));
}

TEST_CASE("empty training data is an error") {
    Corpus empty;
    CHECK_THROWS_AS(train(empty), EmptyTrainingDataError);

    // records without labels are unusable
    Corpus placeholders;
    placeholders.sentences = {{"s1", {"to"}}};
    AnnotationRecord r;
    r.sent_id = "s1";
    r.start = r.end = 1;
    r.form = r.lemma = "to";
    placeholders.records.push_back(r);
    CHECK_THROWS_AS(train(placeholders), EmptyTrainingDataError);
}

TEST_CASE("prediction backs off through contexts before defaults") {
    ExampleBank bank = mini_bank(
        "s1\tby\tp.Originator~>p.Agent\tPassiveBy\tx\n"
        "s2\tby\tp.Means\tNone\tx\n"
        "s3\tby\tp.Means\tNone\tx\n");
    BaselineModel model = train(bank);
    // Means ranks first but fails PassiveBy; Originator~>Agent passes there
    CHECK(model.predict("by", ConstructionContext::PassiveBy) ==
          Label(Construal{Supersense::Originator, Supersense::Agent}));
    CHECK(model.predict("by", ConstructionContext::None) == Label(Supersense::Means));
}

TEST_CASE("context defaults when nothing valid is known") {
    ExampleBank bank = mini_bank("s1\tago\tp.Time~>p.Interval\tNone\tx\n");
    BaselineModel model = train(bank);
    CHECK(model.predict("'s", ConstructionContext::SGenitive) == Label(Supersense::Gestalt));
    CHECK(model.predict("by", ConstructionContext::PassiveBy) == Label(Supersense::Agent));
    CHECK(model.predict("as", ConstructionContext::AsComparativeFirst) ==
          Label(Supersense::Extent));
    CHECK(model.predict("to", ConstructionContext::InfinitivalTo) ==
          Label(SpecialLabel::OtherInfinitive));
    CHECK(model.predict("for", ConstructionContext::InfinitivalForSubject) ==
          Label(SpecialLabel::OtherInfinitive));
    // unseen lemma in the plain context falls back to the global head
    CHECK(model.predict("zzz", ConstructionContext::None) ==
          Label(Construal{Supersense::Time, Supersense::Interval}));
}

TEST_CASE("all predictions validate, over every lemma and context") {
    BaselineModel model = train(shipped_bank());
    for (const std::string& lemma : model.lemmas()) {
        for (int c = 0; c < kConstructionContextCount; ++c) {
            auto ctx = static_cast<ConstructionContext>(c);
            Label prediction = model.predict(lemma, ctx);
            INFO(lemma << " @ " << to_string(ctx) << " -> " << prediction.serialize());
            CHECK(validate(prediction, ctx).ok());
        }
    }
}

TEST_CASE("predictions are deterministic across retrains") {
    BaselineModel a = train(shipped_bank());
    BaselineModel b = train(shipped_bank());
    CHECK(a.serialize() == b.serialize());
    for (const std::string& lemma : a.lemmas()) {
        CHECK(a.predict(lemma, ConstructionContext::None) ==
              b.predict(lemma, ConstructionContext::None));
    }
}

TEST_CASE("model round-trips through its TSV form") {
    BaselineModel model = train(shipped_bank());
    BaselineModel reloaded = BaselineModel::deserialize(model.serialize());
    CHECK(reloaded.serialize() == model.serialize());
    for (const std::string& lemma : model.lemmas()) {
        for (int c = 0; c < kConstructionContextCount; ++c) {
            auto ctx = static_cast<ConstructionContext>(c);
            CHECK(reloaded.predict(lemma, ctx) == model.predict(lemma, ctx));
        }
    }
}

TEST_CASE("tag_corpus fills placeholders and round-trips strictly") {
    BaselineModel model = train(shipped_bank());
    std::string bytes =
        "# sent_id = s1\n"
        "1\tI\n"
        "2\tarrived\n"
        "3\ta\n"
        "4\tyear\n"
        "5\tago\n"
        "\n"
        "# annotations\n"
        "s1\t5:5\tago\t_\t_\tNone\n";
    Corpus input = parse_corpus(bytes, ParseMode::Strict).first;
    Corpus tagged = tag_corpus(model, input);
    REQUIRE(tagged.records.size() == 1);
    CHECK(tagged.records[0].label ==
          Label(Construal{Supersense::Time, Supersense::Interval}));

    auto [reparsed, diagnostics] =
        parse_corpus(serialize_corpus(tagged), ParseMode::Strict);
    CHECK(diagnostics.empty());
    CHECK(reparsed == tagged);

    Corpus empty;
    CHECK(tag_corpus(model, empty) == empty);
}

TEST_CASE("training on a corpus beats the global-fallback-only model on it") {
    Corpus corpus = snacs::testing::bank_pseudo_corpus(shipped_bank());
    BaselineModel model = train(corpus);
    Corpus tagged = tag_corpus(model, corpus);
    ScoreReport trained = score(corpus, tagged);

    // degenerate model: single most frequent label for everything
    BaselineModel degenerate = train(corpus);
    Corpus fallback_only = corpus;
    for (auto& r : fallback_only.records) {
        r.label = degenerate.predict("\x01unseen", r.ctx);
    }
    ScoreReport baseline = score(corpus, fallback_only);
    CHECK(trained.role_acc >= baseline.role_acc);
    CHECK(trained.full_acc >= baseline.full_acc);
}
