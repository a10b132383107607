#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "snacs/errors.hpp"
#include "snacs/schema.hpp"

namespace snacs {

// Non-supersense codes for tokens that no adposition supersense fits.
enum class SpecialLabel : std::uint8_t {
    Discourse,         // `d
    Coordinator,       // `c
    OtherInfinitive,   // `i
    OpaquePossessive,  // `$
};

// Backtick serialization ("`d", "`c", "`i", "`$").
std::string_view code(SpecialLabel s);
std::optional<SpecialLabel> try_parse_special(std::string_view text);

// A scene-role / function pairing. Congruent when both sides are equal.
struct Construal {
    Supersense role;
    Supersense function;

    bool congruent() const { return role == function; }
    friend bool operator==(const Construal&, const Construal&) = default;
    friend auto operator<=>(const Construal&, const Construal&) = default;
};

// Either a Construal or one of the four special labels.
class Label {
public:
    Label(Construal c) : value_(c) {}                       // NOLINT(google-explicit-constructor)
    Label(SpecialLabel s) : value_(s) {}                    // NOLINT(google-explicit-constructor)
    Label(Supersense congruent) : value_(Construal{congruent, congruent}) {}  // NOLINT

    bool is_special() const { return std::holds_alternative<SpecialLabel>(value_); }
    bool is_construal() const { return !is_special(); }

    const Construal& construal() const { return std::get<Construal>(value_); }
    SpecialLabel special() const { return std::get<SpecialLabel>(value_); }

    // Canonical form: "p.Role", "p.Role~>p.Function", or a backtick code.
    std::string serialize() const;

    friend bool operator==(const Label&, const Label&) = default;

    // Orders by canonical serialization; used for deterministic tie-breaking.
    bool operator<(const Label& other) const { return serialize() < other.serialize(); }

private:
    std::variant<Construal, SpecialLabel> value_;
};

// Accepts canonical serializations plus bare "Role" (congruent shorthand);
// the "p." prefix is optional on either side of "~>".
// Throws UnknownLabelError, MalformedLabelError, or SpecialWithConstrualError.
Label parse_label(std::string_view text);

// Syntactic environment of an annotated token, supplied as data.
enum class ConstructionContext : std::uint8_t {
    None,
    SGenitive,
    PassiveBy,
    AsComparativeFirst,
    InfinitivalTo,
    InfinitivalForSubject,
};

inline constexpr int kConstructionContextCount = 6;

const char* to_string(ConstructionContext ctx);
std::optional<ConstructionContext> try_parse_context(std::string_view text);

struct Violation {
    ErrorCode code;
    std::string message;
    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool attested = false;  // advisory; never affects ok()

    bool ok() const { return violations.empty(); }
};

using AttestedSet = std::set<std::pair<Supersense, Supersense>>;

// Applies every categorical rule for the given construction context and
// accumulates all violations (no short-circuiting). Special labels skip the
// role/function rules. When `attested` is provided, the report notes whether
// the (role, function) pair occurs there.
ValidationReport validate(const Label& label, ConstructionContext ctx,
                          const AttestedSet* attested = nullptr);

// Hierarchy relation between the two sides of a construal.
enum class ConstrualDirection {
    Congruent,
    CrossBranch,
    RoleAncestorOfFunction,
    FunctionAncestorOfRole,
};

const char* to_string(ConstrualDirection d);

ConstrualDirection classify_direction(const Construal& c);

// The six non-abstract descendants of Temporal, computed from the hierarchy.
const std::set<Supersense>& temporal_roles();

}  // namespace snacs
