#include "snacs/schema.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace snacs {

namespace {

constexpr std::uint8_t kNoParent = 0xFF;

struct NodeRow {
    std::string_view name;
    std::uint8_t parent;  // index into the table, kNoParent for roots
    Subhierarchy sub;
    bool abstract_label;
};

// Canonical pre-order listing of the inventory. Indices match the Supersense
// enumerators, so casting between them is safe.
constexpr std::array<NodeRow, kSupersenseCount> kNodes = {{
    {"Circumstance", kNoParent, Subhierarchy::Circumstance, false},
    {"Temporal", 0, Subhierarchy::Circumstance, true},
    {"Time", 1, Subhierarchy::Circumstance, false},
    {"StartTime", 2, Subhierarchy::Circumstance, false},
    {"EndTime", 2, Subhierarchy::Circumstance, false},
    {"Frequency", 1, Subhierarchy::Circumstance, false},
    {"Duration", 1, Subhierarchy::Circumstance, false},
    {"Interval", 1, Subhierarchy::Circumstance, false},
    {"Locus", 0, Subhierarchy::Circumstance, false},
    {"Source", 8, Subhierarchy::Circumstance, false},
    {"Goal", 8, Subhierarchy::Circumstance, false},
    {"Path", 0, Subhierarchy::Circumstance, false},
    {"Direction", 11, Subhierarchy::Circumstance, false},
    {"Extent", 11, Subhierarchy::Circumstance, false},
    {"Means", 0, Subhierarchy::Circumstance, false},
    {"Manner", 0, Subhierarchy::Circumstance, false},
    {"Explanation", 0, Subhierarchy::Circumstance, false},
    {"Purpose", 16, Subhierarchy::Circumstance, false},
    {"Participant", kNoParent, Subhierarchy::Participant, true},
    {"Causer", 18, Subhierarchy::Participant, false},
    {"Agent", 19, Subhierarchy::Participant, false},
    {"Co-Agent", 20, Subhierarchy::Participant, false},
    {"Theme", 18, Subhierarchy::Participant, false},
    {"Co-Theme", 22, Subhierarchy::Participant, false},
    {"Topic", 22, Subhierarchy::Participant, false},
    {"Stimulus", 18, Subhierarchy::Participant, false},
    {"Experiencer", 18, Subhierarchy::Participant, false},
    {"Originator", 18, Subhierarchy::Participant, false},
    {"Recipient", 18, Subhierarchy::Participant, false},
    {"Cost", 18, Subhierarchy::Participant, false},
    {"Beneficiary", 18, Subhierarchy::Participant, false},
    {"Instrument", 18, Subhierarchy::Participant, false},
    {"Configuration", kNoParent, Subhierarchy::Configuration, true},
    {"Identity", 32, Subhierarchy::Configuration, false},
    {"Species", 32, Subhierarchy::Configuration, false},
    {"Gestalt", 32, Subhierarchy::Configuration, false},
    {"Possessor", 35, Subhierarchy::Configuration, false},
    {"Whole", 35, Subhierarchy::Configuration, false},
    {"Characteristic", 32, Subhierarchy::Configuration, false},
    {"Possession", 38, Subhierarchy::Configuration, false},
    {"PartPortion", 38, Subhierarchy::Configuration, false},
    {"Stuff", 40, Subhierarchy::Configuration, false},
    {"Accompanier", 32, Subhierarchy::Configuration, false},
    {"InsteadOf", 32, Subhierarchy::Configuration, false},
    {"ComparisonRef", 32, Subhierarchy::Configuration, false},
    {"RateUnit", 32, Subhierarchy::Configuration, false},
    {"Quantity", 32, Subhierarchy::Configuration, false},
    {"Approximator", 46, Subhierarchy::Configuration, false},
    {"SocialRel", 32, Subhierarchy::Configuration, false},
    {"OrgRole", 48, Subhierarchy::Configuration, false},
}};

struct DerivedTables {
    std::array<int, kSupersenseCount> depth{};
    std::array<std::vector<Supersense>, kSupersenseCount> children;
    std::vector<Supersense> all;
    std::map<std::string_view, Supersense> by_name;

    DerivedTables() {
        all.reserve(kSupersenseCount);
        for (int i = 0; i < kSupersenseCount; ++i) {
            int d = 1;
            for (std::uint8_t p = kNodes[i].parent; p != kNoParent; p = kNodes[p].parent) {
                ++d;
            }
            depth[i] = d;
            if (kNodes[i].parent != kNoParent) {
                children[kNodes[i].parent].push_back(static_cast<Supersense>(i));
            }
            all.push_back(static_cast<Supersense>(i));
            by_name.emplace(kNodes[i].name, static_cast<Supersense>(i));
        }
    }
};

const DerivedTables& tables() {
    static const DerivedTables t;
    return t;
}

int idx(Supersense s) { return static_cast<int>(s); }

}  // namespace

const char* to_string(Subhierarchy s) {
    switch (s) {
        case Subhierarchy::Circumstance: return "Circumstance";
        case Subhierarchy::Participant: return "Participant";
        case Subhierarchy::Configuration: return "Configuration";
    }
    return "?";
}

std::string_view name(Supersense s) { return kNodes[idx(s)].name; }

std::optional<Supersense> parent(Supersense s) {
    std::uint8_t p = kNodes[idx(s)].parent;
    if (p == kNoParent) return std::nullopt;
    return static_cast<Supersense>(p);
}

Subhierarchy subhierarchy(Supersense s) { return kNodes[idx(s)].sub; }

int depth(Supersense s) { return tables().depth[idx(s)]; }

bool is_abstract(Supersense s) { return kNodes[idx(s)].abstract_label; }

const std::vector<Supersense>& children(Supersense s) { return tables().children[idx(s)]; }

const std::vector<Supersense>& all_supersenses() { return tables().all; }

std::vector<Supersense> ancestors(Supersense s) {
    std::vector<Supersense> chain;
    for (auto p = parent(s); p; p = parent(*p)) {
        chain.push_back(*p);
    }
    return chain;
}

bool is_ancestor(Supersense a, Supersense b) {
    for (auto p = parent(b); p; p = parent(*p)) {
        if (*p == a) return true;
    }
    return false;
}

std::optional<Supersense> lca(Supersense a, Supersense b) {
    if (subhierarchy(a) != subhierarchy(b)) return std::nullopt;
    // Equalize depths, then walk up in lockstep.
    while (depth(a) > depth(b)) a = *parent(a);
    while (depth(b) > depth(a)) b = *parent(b);
    while (a != b) {
        a = *parent(a);
        b = *parent(b);
    }
    return a;
}

double wu_palmer(Supersense a, Supersense b) {
    auto common = lca(a, b);
    int lca_depth = common ? depth(*common) : 0;
    return 2.0 * lca_depth / (depth(a) + depth(b));
}

std::optional<Supersense> try_parse_supersense(std::string_view text) {
    const auto& m = tables().by_name;
    auto it = m.find(text);
    if (it == m.end()) return std::nullopt;
    return it->second;
}

Supersense parse_supersense(std::string_view text) {
    auto s = try_parse_supersense(text);
    if (!s) {
        throw UnknownLabelError("unknown supersense: \"" + std::string(text) + "\"");
    }
    return *s;
}

namespace {

struct LedgerRow {
    std::string_view v1_name;
    std::vector<Supersense> targets;  // empty means the label was removed outright
};

const std::vector<LedgerRow>& ledger() {
    using S = Supersense;
    static const std::vector<LedgerRow> rows = {
        // Locative concreteness distinction dropped.
        {"Location", {S::Locus}},
        {"InitialLocation", {S::Source}},
        {"Destination", {S::Goal}},
        // Undergoer merges.
        {"Patient", {S::Theme}},
        {"Co-Patient", {S::CoTheme}},
        // Temporal simplification.
        {"DeicticTime", {S::Interval}},
        {"RelativeTime", {S::Time}},
        {"ClockTimeCxn", {S::Time}},
        // Path subhierarchy collapse.
        {"Traversed", {S::Path}},
        {"1DTrajectory", {S::Path}},
        {"2DArea", {S::Path}},
        {"3DMedium", {S::Path}},
        {"Contour", {S::Path}},
        {"Via", {S::Path}},
        {"Transit", {S::Path}},
        {"Course", {S::Path}},
        // Other merges and renames.
        {"Material", {S::Source}},
        {"Donor/Speaker", {S::Originator}},
        {"Creator", {S::Originator}},
        {"Instance", {S::Identity}},
        {"ProfessionalAspect", {S::SocialRel}},
        {"Part/Portion", {S::PartPortion}},
        {"Activity", {S::Circumstance, S::Topic}},
        {"Reciprocation", {S::Explanation}},
        {"Attribute", {S::Characteristic, S::Identity}},
        {"Function", {S::Purpose}},
        {"Elements", {S::PartPortion}},
        {"Superset", {S::Whole}},
        {"Asset", {S::Cost}},
        {"Value", {S::Cost}},
        // Removed without a v2 successor.
        {"State", {}},
        {"StartState", {}},
        {"EndState", {}},
        {"ValueComparison", {}},
        {"Comparison/Contrast", {}},
        {"Scalar/Rank", {}},
        {"Affector", {}},
        {"Undergoer", {}},
        {"Place", {}},
        {"Age", {}},
        {"Co-Participant", {}},
    };
    return rows;
}

}  // namespace

MigrationResult migrate_v1(std::string_view v1_name) {
    if (try_parse_supersense(v1_name)) {
        return {MigrationResult::Kind::AlreadyV2, {}};
    }
    for (const auto& row : ledger()) {
        if (row.v1_name == v1_name) {
            if (row.targets.empty()) return {MigrationResult::Kind::Removed, {}};
            return {MigrationResult::Kind::MapsTo,
                    std::set<Supersense>(row.targets.begin(), row.targets.end())};
        }
    }
    throw UnknownLabelError("name not in the v1 ledger or the v2 inventory: \"" +
                            std::string(v1_name) + "\"");
}

std::vector<std::string_view> v1_ledger_names() {
    std::vector<std::string_view> names;
    names.reserve(ledger().size());
    for (const auto& row : ledger()) names.push_back(row.v1_name);
    return names;
}

std::string export_schema() {
    std::ostringstream out;
    out << "NAME\tPARENT\tSUBHIERARCHY\tABSTRACT\tDEPTH\n";
    for (Supersense s : all_supersenses()) {
        auto p = parent(s);
        out << name(s) << '\t' << (p ? name(*p) : "-") << '\t'
            << to_string(subhierarchy(s)) << '\t' << (is_abstract(s) ? "true" : "false")
            << '\t' << depth(s) << '\n';
    }
    return out.str();
}

}  // namespace snacs
