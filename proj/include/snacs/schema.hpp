#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "snacs/errors.hpp"

namespace snacs {

// The fixed v2 inventory: a forest of three subhierarchies totalling 50 labels.
// Enumerator order is the canonical pre-order traversal
// (Circumstance -> Participant -> Configuration), which fixes all exported
// record orders.
enum class Supersense : std::uint8_t {
    Circumstance,
    Temporal,
    Time,
    StartTime,
    EndTime,
    Frequency,
    Duration,
    Interval,
    Locus,
    Source,
    Goal,
    Path,
    Direction,
    Extent,
    Means,
    Manner,
    Explanation,
    Purpose,
    Participant,
    Causer,
    Agent,
    CoAgent,
    Theme,
    CoTheme,
    Topic,
    Stimulus,
    Experiencer,
    Originator,
    Recipient,
    Cost,
    Beneficiary,
    Instrument,
    Configuration,
    Identity,
    Species,
    Gestalt,
    Possessor,
    Whole,
    Characteristic,
    Possession,
    PartPortion,
    Stuff,
    Accompanier,
    InsteadOf,
    ComparisonRef,
    RateUnit,
    Quantity,
    Approximator,
    SocialRel,
    OrgRole,
};

inline constexpr int kSupersenseCount = 50;

enum class Subhierarchy : std::uint8_t { Circumstance, Participant, Configuration };

const char* to_string(Subhierarchy s);

// Canonical spelling, exactly as in the inventory ("Co-Agent", "PartPortion", ...).
std::string_view name(Supersense s);

// Parent link; empty for the three subhierarchy roots.
std::optional<Supersense> parent(Supersense s);

Subhierarchy subhierarchy(Supersense s);

// Depth below the synthetic virtual root: roots are 1, maximum is 4.
int depth(Supersense s);

// True only for Participant, Configuration, and Temporal, which organize the
// forest but never annotate tokens.
bool is_abstract(Supersense s);

// Children in canonical pre-order.
const std::vector<Supersense>& children(Supersense s);

// All 50 supersenses in canonical pre-order.
const std::vector<Supersense>& all_supersenses();

// Chain from s's parent up to its subhierarchy root; empty for roots.
std::vector<Supersense> ancestors(Supersense s);

// True if a is a proper ancestor of b.
bool is_ancestor(Supersense a, Supersense b);

// Deepest common element of the two ancestor-or-self chains; empty when the
// arguments lie in different subhierarchies (they meet only at the virtual root).
std::optional<Supersense> lca(Supersense a, Supersense b);

// 2*depth(lca) / (depth(a)+depth(b)), with the virtual root at depth 0.
// 0 across subhierarchies, 1 iff a == b.
double wu_palmer(Supersense a, Supersense b);

// Exact, case-sensitive lookup by canonical name.
std::optional<Supersense> try_parse_supersense(std::string_view text);

// Like try_parse_supersense but throws UnknownLabelError on failure.
Supersense parse_supersense(std::string_view text);

// v1 -> v2 migration over the fixed rename/merge/removal ledger.
struct MigrationResult {
    enum class Kind { MapsTo, Removed, AlreadyV2 };
    Kind kind;
    std::set<Supersense> targets;  // populated only for MapsTo
};

// Throws UnknownLabelError for names in neither the v1 ledger nor the v2 inventory.
MigrationResult migrate_v1(std::string_view v1_name);

// Names of the retired v1 labels the ledger covers (for enumeration in tools/tests).
std::vector<std::string_view> v1_ledger_names();

// One record per label (name, parent, subhierarchy, abstract, depth) in
// canonical pre-order; byte-stable.
std::string export_schema();

}  // namespace snacs
