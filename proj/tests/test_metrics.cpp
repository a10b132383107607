#include <doctest.h>

#include <algorithm>
#include <random>

#include "snacs/metrics.hpp"
#include "support.hpp"

using namespace snacs;
using snacs::testing::make_random_corpus;

namespace {

Corpus toy_gold() {
    Corpus corpus;
    corpus.sentences = {{"t1", {"w1", "w2", "w3"}}};
    auto add = [&](int token, const char* label) {
        AnnotationRecord r;
        r.sent_id = "t1";
        r.start = r.end = token;
        r.form = r.lemma = "w" + std::to_string(token);
        r.label = parse_label(label);
        corpus.records.push_back(std::move(r));
    };
    add(1, "Locus");
    add(2, "Time~>Interval");
    add(3, "Gestalt");
    return corpus;
}

}  // namespace

TEST_CASE("identity scoring is perfect") {
    std::mt19937 rng(5);
    for (int i = 0; i < 10; ++i) {
        Corpus corpus = make_random_corpus(rng, 12, 5);
        ScoreReport report = score(corpus, corpus);
        CHECK(report.role_acc == 1.0);
        CHECK(report.func_acc == 1.0);
        CHECK(report.full_acc == 1.0);
        CHECK(report.role_wp == 1.0);
        CHECK(report.func_wp == 1.0);
        CHECK(report.ident_p == 1.0);
        CHECK(report.ident_r == 1.0);
        CHECK(report.ident_f == 1.0);
    }
    // the empty corpus also scores perfectly against itself
    Corpus empty;
    ScoreReport report = score(empty, empty);
    CHECK(report.full_acc == 1.0);
    CHECK(report.ident_f == 1.0);
}

TEST_CASE("toy fixture: one missing prediction") {
    Corpus gold = toy_gold();
    Corpus pred = gold;
    pred.records.pop_back();  // drop one prediction

    ScoreReport report = score(gold, pred);
    CHECK(report.n_gold == 3);
    CHECK(report.n_pred == 2);
    CHECK(report.n_matched_spans == 2);
    CHECK(report.ident_p == doctest::Approx(1.0));
    CHECK(report.ident_r == doctest::Approx(2.0 / 3.0));
    CHECK(report.ident_f == doctest::Approx(0.8));
    CHECK(report.role_acc == 1.0);
    CHECK(report.full_acc == 1.0);
}

TEST_CASE("StartTime vs EndTime scores 0.75 on Wu-Palmer") {
    Corpus gold;
    gold.sentences = {{"t1", {"w1"}}};
    AnnotationRecord r;
    r.sent_id = "t1";
    r.start = r.end = 1;
    r.form = r.lemma = "w1";
    r.label = Label(Supersense::StartTime);
    gold.records.push_back(r);

    Corpus pred = gold;
    pred.records[0].label = Label(Supersense::EndTime);

    ScoreReport report = score(gold, pred);
    CHECK(report.full_acc == 0.0);
    CHECK(report.role_acc == 0.0);
    CHECK(report.role_wp == doctest::Approx(0.75));
    CHECK(report.func_wp == doctest::Approx(0.75));
    REQUIRE(report.confusion.size() == 1);
    CHECK(report.confusion.begin()->first.first == "p.StartTime");
    CHECK(report.confusion.begin()->first.second == "p.EndTime");
}

TEST_CASE("special labels are atomic categories") {
    Corpus gold;
    gold.sentences = {{"t1", {"w1", "w2"}}};
    for (int t = 1; t <= 2; ++t) {
        AnnotationRecord r;
        r.sent_id = "t1";
        r.start = r.end = t;
        r.form = r.lemma = "w" + std::to_string(t);
        gold.records.push_back(r);
    }
    gold.records[0].label = Label(SpecialLabel::Discourse);
    gold.records[1].label = Label(SpecialLabel::Discourse);

    Corpus pred = gold;
    pred.records[0].label = Label(SpecialLabel::Coordinator);   // special vs special: 0
    pred.records[1].label = Label(Supersense::Locus);           // special vs supersense: 0

    ScoreReport report = score(gold, pred);
    CHECK(report.role_acc == 0.0);
    CHECK(report.role_wp == 0.0);
    CHECK(report.func_wp == 0.0);

    pred.records[0].label = Label(SpecialLabel::Discourse);  // equal specials: 1
    report = score(gold, pred);
    CHECK(report.role_acc == 0.5);
    CHECK(report.role_wp == 0.5);
}

TEST_CASE("invariants on random corpora") {
    std::mt19937 rng(17);
    for (int i = 0; i < 15; ++i) {
        Corpus gold = make_random_corpus(rng, 10, 5);
        Corpus pred = gold;
        // perturb some predictions
        const auto& pool = snacs::testing::valid_label_pool();
        std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
        for (size_t r = 0; r < pred.records.size(); r += 2) {
            pred.records[r].label = pool[pick(rng)];
        }
        ScoreReport report = score(gold, pred);

        CHECK(report.full_acc <= std::min(report.role_acc, report.func_acc) + 1e-12);
        CHECK(report.role_wp >= report.role_acc - 1e-12);
        CHECK(report.func_wp >= report.func_acc - 1e-12);
        double expected_f = (report.ident_p + report.ident_r) == 0
                                ? 0.0
                                : 2 * report.ident_p * report.ident_r /
                                      (report.ident_p + report.ident_r);
        CHECK(report.ident_f == doctest::Approx(expected_f));

        long long confusion_total = 0;
        for (const auto& [key, count] : report.confusion) confusion_total += count;
        CHECK(confusion_total == report.n_matched_spans);

        // parallel kernel agrees with the serial reference
        CHECK(report.to_machine_string() == score_serial(gold, pred).to_machine_string());
    }
}

TEST_CASE("record order does not matter") {
    std::mt19937 rng(23);
    Corpus gold = make_random_corpus(rng, 8, 4);
    Corpus pred = gold;
    const auto& pool = snacs::testing::valid_label_pool();
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    for (size_t r = 0; r < pred.records.size(); r += 3) {
        pred.records[r].label = pool[pick(rng)];
    }
    std::string baseline = score(gold, pred).to_machine_string();

    std::shuffle(gold.records.begin(), gold.records.end(), rng);
    std::shuffle(pred.records.begin(), pred.records.end(), rng);
    CHECK(score(gold, pred).to_machine_string() == baseline);
}

TEST_CASE("correcting a prediction never hurts") {
    std::mt19937 rng(31);
    for (int i = 0; i < 10; ++i) {
        Corpus gold = make_random_corpus(rng, 6, 4);
        Corpus pred = gold;
        const auto& pool = snacs::testing::valid_label_pool();
        std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
        for (auto& r : pred.records) r.label = pool[pick(rng)];

        ScoreReport before = score(gold, pred);
        std::uniform_int_distribution<size_t> pick_record(0, pred.records.size() - 1);
        size_t fix = pick_record(rng);
        pred.records[fix].label = gold.records[fix].label;
        ScoreReport after = score(gold, pred);

        CHECK(after.role_acc >= before.role_acc - 1e-12);
        CHECK(after.func_acc >= before.func_acc - 1e-12);
        CHECK(after.full_acc >= before.full_acc - 1e-12);
        CHECK(after.role_wp >= before.role_wp - 1e-12);
        CHECK(after.func_wp >= before.func_wp - 1e-12);
    }
}

TEST_CASE("mismatched sentence inventories are rejected") {
    std::mt19937 rng(41);
    Corpus gold = make_random_corpus(rng, 5, 3);
    Corpus pred = gold;
    pred.sentences.pop_back();
    CHECK_THROWS_AS(score(gold, pred), CorpusMismatchError);

    pred = gold;
    pred.sentences[0].tokens.push_back("extra");
    CHECK_THROWS_AS(score(gold, pred), CorpusMismatchError);
}

TEST_CASE("report serializations are stable") {
    Corpus gold = toy_gold();
    Corpus pred = gold;
    pred.records.pop_back();
    ScoreReport report = score(gold, pred);
    std::string machine = report.to_machine_string();
    CHECK(machine == score(gold, pred).to_machine_string());
    CHECK(machine.find("ident_f\t0.800000\n") != std::string::npos);
    CHECK(machine.find("n_matched_spans\t2\n") != std::string::npos);
    CHECK(report.to_table_string().find("matched 2") != std::string::npos);
}
