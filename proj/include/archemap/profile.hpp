/*
 * Copyright (c) 2026 the archemap authors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef ARCHEMAP_PROFILE_HPP
#define ARCHEMAP_PROFILE_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "archemap/model.hpp"

namespace archemap {

enum class TermKind { TYPE, PROPERTY };
enum class Range { TEXT, INTEGER, NODE_REF, DATE_TEXT };

/// One declared vocabulary term: a type with parents, or a property with
/// domain types and a value range.
struct VocabularyTerm {
    std::string name;
    TermKind kind = TermKind::TYPE;
    std::vector<std::string> parents;      // TYPE only
    std::vector<std::string> domain_types; // PROPERTY only
    Range range = Range::TEXT;             // PROPERTY only
};

/// Which of the two archive modeling approaches to emit.
enum class ModelVariant { INITIAL, ALTERNATIVE };

std::string to_string(ModelVariant variant);
std::optional<ModelVariant> variant_from_string(const std::string &name);

/// Node type names the INITIAL variant assigns per unit position
/// (configurable through the registry's `variants.initial` object).
struct InitialTypeNames {
    std::string root_type = "ArchiveCollection";
    std::string intermediate_type = "ArchiveComponent";
    std::string leaf_type = "ArchiveItem";
};

enum class Transform { COPY_TEXT, COPY_DATE, LINK_AGENT, LINK_REPOSITORY, EXTENT_SPLIT };
enum class Cardinality { ONE, MANY };

/// One crosswalk row: source element → target property with a transform.
struct MappingRule {
    SourceElementRef source;
    std::string target_property;
    std::vector<std::string> applies_to;
    Transform transform = Transform::COPY_TEXT;
    Cardinality cardinality = Cardinality::ONE;
};

enum class GapReason {
    EXCLUDED_DESCRIPTION_CONTROL,
    EXCLUDED_LEVEL,
    EXCLUDED_REFERENCE_CODE,
    NO_MAPPING_IDENTIFIED,
    UNKNOWN,
};

std::string to_string(GapReason reason);
std::optional<GapReason> gap_reason_from_string(const std::string &name);

/// A documented non-mapping: the source element, why it is not mapped,
/// and the profile's recorded rationale for the deliberate reasons.
struct GapEntry {
    SourceElementRef source;
    GapReason reason = GapReason::UNKNOWN;
    std::string citation;

    friend bool operator==(const GapEntry &, const GapEntry &) = default;
};

using LookupResult = std::variant<MappingRule, GapEntry>;

/// The loaded application profile: vocabulary, mapping registry,
/// exclusion ledger, selected model variant, namespace policy.
/// Immutable after load; safe to share across concurrent conversions.
struct Profile {
    std::map<std::string, VocabularyTerm> vocabulary;
    std::vector<MappingRule> registry;
    std::vector<GapEntry> exclusions;
    ModelVariant variant = ModelVariant::ALTERNATIVE;
    InitialTypeNames initial_names;
    std::string context_namespace_core = "http://schema.org/";
    std::string context_namespace_pending = "http://schema.org/";
    std::set<std::string> pending_terms;

    std::map<SourceElementRef, std::size_t> rule_index;
    std::map<SourceElementRef, std::size_t> exclusion_index;

    bool has_type(const std::string &name) const;
    bool has_property(const std::string &name) const;

    /// True when `name` equals `ancestor` or is declared (transitively)
    /// below it in the type hierarchy.
    bool is_subtype_of(const std::string &name, const std::string &ancestor) const;

    /// Full IRI for a vocabulary term under the namespace policy.
    std::string expand_term(const std::string &name) const;
};

/// Parses the registry document and builds a Profile for the chosen
/// variant. Throws DuplicateSource, UndeclaredTerm, or MalformedRegistry.
Profile load_profile(std::string_view registry_doc, ModelVariant variant);

/// Loads the registry shipped with the binary (profile/default.json).
Profile load_default_profile(ModelVariant variant);

/// The embedded copy of the shipped registry document.
std::string_view default_registry_document();

/// Total lookup: the unique rule for `source`, else the matching
/// exclusion, else a synthesized UNKNOWN gap entry.
LookupResult lookup(const Profile &profile, const SourceElementRef &source);

struct SchemaNode; // crosswalk.hpp

/// Conformance check of an emitted node against the vocabulary:
/// undeclared types/properties, domain-closure misses, range mismatches.
std::vector<std::string> validate_node(const Profile &profile, const SchemaNode &node);

} // namespace archemap

#endif
