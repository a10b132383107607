#include "snacs/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "snacs/corpus.hpp"
#include "snacs/examplebank.hpp"
#include "snacs/metrics.hpp"
#include "snacs/schema.hpp"
#include "snacs/tagger.hpp"

namespace snacs {

namespace {

std::string fixed6(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write file: " + path);
    out << bytes;
}

int cmd_validate(const std::string& path, bool strict, std::ostream& out) {
    auto [corpus, diagnostics] = parse_corpus_file(path, ParseMode::Lenient);
    if (diagnostics.empty()) return 0;
    size_t limit = strict ? 1 : diagnostics.size();
    for (size_t i = 0; i < limit; ++i) {
        const Diagnostic& d = diagnostics[i];
        out << path << ':' << d.line << ' ' << to_string(d.code) << ' ' << d.message << '\n';
    }
    return 1;
}

int cmd_score(const std::string& gold_path, const std::string& pred_path,
              const std::string& format, std::ostream& out) {
    Corpus gold = parse_corpus_file(gold_path, ParseMode::Lenient).first;
    Corpus pred = parse_corpus_file(pred_path, ParseMode::Lenient).first;
    ScoreReport report = score(gold, pred);
    out << (format == "machine" ? report.to_machine_string() : report.to_table_string());
    return 0;
}

int cmd_query(const std::string& label, bool show_ancestors, bool show_children,
              const std::string& other, std::ostream& out) {
    Supersense s = parse_supersense(label);
    if (show_ancestors) {
        std::string line;
        for (Supersense a : ancestors(s)) {
            if (!line.empty()) line += ' ';
            line += name(a);
        }
        out << line << '\n';
        return 0;
    }
    if (show_children) {
        std::string line;
        for (Supersense c : children(s)) {
            if (!line.empty()) line += ' ';
            line += name(c);
        }
        out << line << '\n';
        return 0;
    }
    if (!other.empty()) {
        out << fixed6(wu_palmer(s, parse_supersense(other))) << '\n';
        return 0;
    }
    auto p = parent(s);
    out << name(s) << '\t' << (p ? name(*p) : "-") << '\t' << to_string(subhierarchy(s))
        << '\t' << (is_abstract(s) ? "true" : "false") << '\t' << depth(s) << '\n';
    return 0;
}

int cmd_tag(const std::string& model_path, const std::string& bank_path,
            const std::string& in_path, const std::string& out_path) {
    BaselineModel model = bank_path.empty() ? BaselineModel::load_file(model_path)
                                            : train(load_bank_file(bank_path));
    Corpus corpus = parse_corpus_file(in_path, ParseMode::Lenient).first;
    write_file(out_path, serialize_corpus(tag_corpus(model, corpus)));
    return 0;
}

int cmd_migrate(const std::string& v1_name, std::ostream& out) {
    MigrationResult result = migrate_v1(v1_name);
    switch (result.kind) {
        case MigrationResult::Kind::Removed:
            out << "REMOVED\n";
            break;
        case MigrationResult::Kind::AlreadyV2:
            out << "ALREADY-V2\n";
            break;
        case MigrationResult::Kind::MapsTo: {
            std::vector<std::string> names;
            for (Supersense s : result.targets) names.emplace_back(name(s));
            std::sort(names.begin(), names.end());
            out << "MapsTo:";
            for (const auto& n : names) out << ' ' << n;
            out << '\n';
            break;
        }
    }
    return 0;
}

int cmd_export_schema(const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << export_schema();
    } else {
        write_file(out_path, export_schema());
    }
    return 0;
}

int cmd_stats(const std::string& path, std::ostream& out) {
    Corpus corpus = parse_corpus_file(path, ParseMode::Lenient).first;
    std::map<std::string, long long> counts;
    for (const auto& record : corpus.records) {
        if (record.label) ++counts[record.label->serialize()];
    }
    std::vector<std::pair<std::string, long long>> rows(counts.begin(), counts.end());
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    out << "LABEL\tCOUNT\n";
    for (const auto& [label, count] : rows) {
        out << label << '\t' << count << '\n';
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"SNACS v2 adposition supersense toolkit"};
    app.name("snacs");
    app.require_subcommand(1);

    std::string corpus_path, gold_path, pred_path, format = "table";
    std::string label, wp_other, model_path, bank_path, in_path, out_path, v1_name;
    std::string schema_out;
    bool strict = false, show_ancestors = false, show_children = false;

    auto* validate_cmd = app.add_subcommand("validate", "Check a corpus and print diagnostics");
    validate_cmd->add_option("corpus", corpus_path)->required();
    validate_cmd->add_flag("--strict", strict, "Stop at the first violation");

    auto* score_cmd = app.add_subcommand("score", "Score predictions against gold");
    score_cmd->add_option("--gold", gold_path)->required();
    score_cmd->add_option("--pred", pred_path)->required();
    score_cmd->add_option("--format", format)->check(CLI::IsMember({"table", "machine"}));

    auto* query_cmd = app.add_subcommand("query", "Hierarchy queries");
    query_cmd->add_option("label", label)->required();
    query_cmd->add_flag("--ancestors", show_ancestors);
    query_cmd->add_flag("--children", show_children);
    query_cmd->add_option("--wu-palmer", wp_other, "Similarity against another label");

    auto* tag_cmd = app.add_subcommand("tag", "Baseline-tag a corpus");
    tag_cmd->add_option("--model", model_path, "Saved model TSV");
    tag_cmd->add_option("--train", bank_path, "Example bank TSV to train on");
    tag_cmd->add_option("corpus-in", in_path)->required();
    tag_cmd->add_option("corpus-out", out_path)->required();

    auto* migrate_cmd = app.add_subcommand("migrate", "Resolve a v1 label name");
    migrate_cmd->add_option("v1-name", v1_name)->required();

    auto* export_cmd = app.add_subcommand("export-schema", "Emit the label inventory");
    export_cmd->add_option("--out", schema_out);

    auto* stats_cmd = app.add_subcommand("stats", "Label frequency table for a corpus");
    stats_cmd->add_option("corpus", corpus_path)->required();

    std::vector<const char*> argv;
    argv.push_back("snacs");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n' << app.help();
        return 2;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(corpus_path, strict, out);
        if (score_cmd->parsed()) return cmd_score(gold_path, pred_path, format, out);
        if (query_cmd->parsed()) {
            return cmd_query(label, show_ancestors, show_children, wp_other, out);
        }
        if (tag_cmd->parsed()) {
            if (model_path.empty() == bank_path.empty()) {
                err << "tag: exactly one of --model or --train is required\n";
                return 2;
            }
            return cmd_tag(model_path, bank_path, in_path, out_path);
        }
        if (migrate_cmd->parsed()) return cmd_migrate(v1_name, out);
        if (export_cmd->parsed()) return cmd_export_schema(schema_out, out);
        if (stats_cmd->parsed()) return cmd_stats(corpus_path, out);
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << app.help();
    return 2;
}

}  // namespace snacs
