#include "snacs/construal.hpp"

#include <algorithm>

namespace snacs {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::E_ABSTRACT_USE: return "E_ABSTRACT_USE";
        case ErrorCode::E_FUNCTION_FORBIDDEN: return "E_FUNCTION_FORBIDDEN";
        case ErrorCode::E_TEMPORAL_FUNCTION: return "E_TEMPORAL_FUNCTION";
        case ErrorCode::E_CONSTRUCTION_MISMATCH: return "E_CONSTRUCTION_MISMATCH";
        case ErrorCode::E_UNKNOWN_LABEL: return "E_UNKNOWN_LABEL";
        case ErrorCode::E_FORMAT: return "E_FORMAT";
    }
    return "?";
}

std::string_view code(SpecialLabel s) {
    switch (s) {
        case SpecialLabel::Discourse: return "`d";
        case SpecialLabel::Coordinator: return "`c";
        case SpecialLabel::OtherInfinitive: return "`i";
        case SpecialLabel::OpaquePossessive: return "`$";
    }
    return "?";
}

std::optional<SpecialLabel> try_parse_special(std::string_view text) {
    if (text == "`d") return SpecialLabel::Discourse;
    if (text == "`c") return SpecialLabel::Coordinator;
    if (text == "`i") return SpecialLabel::OtherInfinitive;
    if (text == "`$") return SpecialLabel::OpaquePossessive;
    return std::nullopt;
}

std::string Label::serialize() const {
    if (is_special()) return std::string(code(special()));
    const Construal& c = construal();
    std::string out = "p." + std::string(name(c.role));
    if (!c.congruent()) {
        out += "~>p.";
        out += name(c.function);
    }
    return out;
}

namespace {

std::string_view strip_prefix(std::string_view side) {
    if (side.substr(0, 2) == "p.") side.remove_prefix(2);
    return side;
}

Supersense parse_side(std::string_view side, std::string_view whole) {
    auto s = try_parse_supersense(strip_prefix(side));
    if (!s) {
        throw UnknownLabelError("unknown supersense \"" + std::string(side) +
                                "\" in label \"" + std::string(whole) + "\"");
    }
    return *s;
}

constexpr std::string_view kArrow = "~>";

}  // namespace

Label parse_label(std::string_view text) {
    auto arrow = text.find(kArrow);
    if (arrow == std::string_view::npos) {
        if (auto sp = try_parse_special(text)) return Label(*sp);
        if (!text.empty() && text.front() == '`') {
            throw UnknownLabelError("unknown special label \"" + std::string(text) + "\"");
        }
        Supersense s = parse_side(text, text);
        return Label(Construal{s, s});
    }
    std::string_view lhs = text.substr(0, arrow);
    std::string_view rhs = text.substr(arrow + kArrow.size());
    if (rhs.find(kArrow) != std::string_view::npos) {
        throw MalformedLabelError("label has more than one \"~>\": \"" + std::string(text) + "\"");
    }
    if (try_parse_special(lhs) || try_parse_special(rhs)) {
        throw SpecialWithConstrualError("special label may not carry a construal: \"" +
                                        std::string(text) + "\"");
    }
    if (lhs.empty() || rhs.empty()) {
        throw MalformedLabelError("empty construal side in \"" + std::string(text) + "\"");
    }
    return Label(Construal{parse_side(lhs, text), parse_side(rhs, text)});
}

const char* to_string(ConstructionContext ctx) {
    switch (ctx) {
        case ConstructionContext::None: return "None";
        case ConstructionContext::SGenitive: return "SGenitive";
        case ConstructionContext::PassiveBy: return "PassiveBy";
        case ConstructionContext::AsComparativeFirst: return "AsComparativeFirst";
        case ConstructionContext::InfinitivalTo: return "InfinitivalTo";
        case ConstructionContext::InfinitivalForSubject: return "InfinitivalForSubject";
    }
    return "?";
}

std::optional<ConstructionContext> try_parse_context(std::string_view text) {
    for (int i = 0; i < kConstructionContextCount; ++i) {
        auto ctx = static_cast<ConstructionContext>(i);
        if (text == to_string(ctx)) return ctx;
    }
    return std::nullopt;
}

const std::set<Supersense>& temporal_roles() {
    static const std::set<Supersense> roles = [] {
        std::set<Supersense> r;
        for (Supersense s : all_supersenses()) {
            if (s != Supersense::Temporal && is_ancestor(Supersense::Temporal, s)) {
                r.insert(s);
            }
        }
        return r;
    }();
    return roles;
}

namespace {

bool is_forbidden_function(Supersense f) {
    switch (f) {
        case Supersense::Experiencer:
        case Supersense::Stimulus:
        case Supersense::Originator:
        case Supersense::Recipient:
        case Supersense::SocialRel:
        case Supersense::OrgRole:
            return true;
        default:
            return false;
    }
}

std::string sense_name(Supersense s) { return std::string(name(s)); }

void check_construction(const Label& label, ConstructionContext ctx,
                        std::vector<Violation>& out) {
    auto mismatch = [&](const std::string& message) {
        out.push_back({ErrorCode::E_CONSTRUCTION_MISMATCH, message});
    };
    switch (ctx) {
        case ConstructionContext::None:
            return;
        case ConstructionContext::SGenitive: {
            if (label.is_special()) {
                if (label.special() != SpecialLabel::OpaquePossessive) {
                    mismatch("s-genitive allows only `$ among the special labels");
                }
                return;
            }
            Supersense f = label.construal().function;
            if (f != Supersense::Gestalt && f != Supersense::Possessor) {
                mismatch("s-genitive function must be Gestalt or Possessor, got " +
                         sense_name(f));
            }
            return;
        }
        case ConstructionContext::PassiveBy: {
            if (label.is_special()) {
                mismatch("passive by-phrase does not take special labels");
                return;
            }
            Supersense f = label.construal().function;
            if (f != Supersense::Agent && f != Supersense::Causer) {
                mismatch("passive by-phrase function must be Agent or Causer, got " +
                         sense_name(f));
            }
            return;
        }
        case ConstructionContext::AsComparativeFirst: {
            if (label.is_special()) {
                mismatch("first as-comparative argument does not take special labels");
                return;
            }
            Supersense f = label.construal().function;
            if (f != Supersense::Extent) {
                mismatch("function of the first as-comparative marker must be Extent, got " +
                         sense_name(f));
            }
            return;
        }
        case ConstructionContext::InfinitivalTo: {
            if (label.is_special()) {
                if (label.special() != SpecialLabel::OtherInfinitive) {
                    mismatch("infinitival to allows only `i among the special labels");
                }
                return;
            }
            const Construal& c = label.construal();
            bool allowed =
                (c.congruent() && c.role == Supersense::Purpose) ||
                (c.function == Supersense::Purpose &&
                 (c.role == Supersense::Characteristic || c.role == Supersense::Theme ||
                  c.role == Supersense::ComparisonRef));
            if (!allowed) {
                mismatch("infinitival to admits only Purpose, Characteristic~>Purpose, "
                         "Theme~>Purpose, ComparisonRef~>Purpose, or `i");
            }
            return;
        }
        case ConstructionContext::InfinitivalForSubject: {
            if (!label.is_special() || label.special() != SpecialLabel::OtherInfinitive) {
                mismatch("for introducing an infinitival subject must be labeled `i");
            }
            return;
        }
    }
}

}  // namespace

ValidationReport validate(const Label& label, ConstructionContext ctx,
                          const AttestedSet* attested) {
    ValidationReport report;
    if (label.is_construal()) {
        const Construal& c = label.construal();

        // (1) purely abstract supersenses never annotate tokens
        if (is_abstract(c.role) || is_abstract(c.function)) {
            std::string which = is_abstract(c.role) ? sense_name(c.role) : sense_name(c.function);
            report.violations.push_back(
                {ErrorCode::E_ABSTRACT_USE,
                 "abstract supersense " + which + " only organizes the hierarchy"});
        }

        // (2) scene-role-only supersenses
        if (is_forbidden_function(c.function)) {
            report.violations.push_back(
                {ErrorCode::E_FUNCTION_FORBIDDEN,
                 sense_name(c.function) + " can only serve as a scene role"});
        }

        // (3) no temporal-locational construals, except Extent under the
        //     first as-comparative marker
        bool temporal_role = temporal_roles().count(c.role) > 0;
        bool spatial_function = c.function == Supersense::Locus ||
                                c.function == Supersense::Path ||
                                c.function == Supersense::Extent;
        bool as_extent_exception = ctx == ConstructionContext::AsComparativeFirst &&
                                   c.function == Supersense::Extent;
        if (temporal_role && spatial_function && !as_extent_exception) {
            report.violations.push_back(
                {ErrorCode::E_TEMPORAL_FUNCTION,
                 "temporal role " + sense_name(c.role) + " may not take function " +
                     sense_name(c.function)});
        }

        if (attested) {
            report.attested = attested->count({c.role, c.function}) > 0;
        }
    }

    // (4)-(8) construction-bound requirements
    check_construction(label, ctx, report.violations);
    return report;
}

const char* to_string(ConstrualDirection d) {
    switch (d) {
        case ConstrualDirection::Congruent: return "Congruent";
        case ConstrualDirection::CrossBranch: return "CrossBranch";
        case ConstrualDirection::RoleAncestorOfFunction: return "RoleAncestorOfFunction";
        case ConstrualDirection::FunctionAncestorOfRole: return "FunctionAncestorOfRole";
    }
    return "?";
}

ConstrualDirection classify_direction(const Construal& c) {
    if (c.congruent()) return ConstrualDirection::Congruent;
    if (is_ancestor(c.role, c.function)) return ConstrualDirection::RoleAncestorOfFunction;
    if (is_ancestor(c.function, c.role)) return ConstrualDirection::FunctionAncestorOfRole;
    return ConstrualDirection::CrossBranch;
}

}  // namespace snacs
