/*
 * Copyright (c) 2026 the archemap authors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "archemap/profile.hpp"

#include <json.hpp>

#include "archemap/crosswalk.hpp"
#include "archemap/errors.hpp"

using nlohmann::ordered_json;

namespace archemap {

std::string to_string(ModelVariant variant) {
    return variant == ModelVariant::INITIAL ? "INITIAL" : "ALTERNATIVE";
}

std::optional<ModelVariant> variant_from_string(const std::string &name) {
    if (name == "INITIAL" || name == "initial")
        return ModelVariant::INITIAL;
    if (name == "ALTERNATIVE" || name == "alternative")
        return ModelVariant::ALTERNATIVE;
    return std::nullopt;
}

std::string to_string(GapReason reason) {
    switch (reason) {
    case GapReason::EXCLUDED_DESCRIPTION_CONTROL:
        return "EXCLUDED_DESCRIPTION_CONTROL";
    case GapReason::EXCLUDED_LEVEL:
        return "EXCLUDED_LEVEL";
    case GapReason::EXCLUDED_REFERENCE_CODE:
        return "EXCLUDED_REFERENCE_CODE";
    case GapReason::NO_MAPPING_IDENTIFIED:
        return "NO_MAPPING_IDENTIFIED";
    case GapReason::UNKNOWN:
        return "UNKNOWN";
    }
    return "?";
}

std::optional<GapReason> gap_reason_from_string(const std::string &name) {
    if (name == "EXCLUDED_DESCRIPTION_CONTROL")
        return GapReason::EXCLUDED_DESCRIPTION_CONTROL;
    if (name == "EXCLUDED_LEVEL")
        return GapReason::EXCLUDED_LEVEL;
    if (name == "EXCLUDED_REFERENCE_CODE")
        return GapReason::EXCLUDED_REFERENCE_CODE;
    if (name == "NO_MAPPING_IDENTIFIED")
        return GapReason::NO_MAPPING_IDENTIFIED;
    if (name == "UNKNOWN")
        return GapReason::UNKNOWN;
    return std::nullopt;
}

bool Profile::has_type(const std::string &name) const {
    auto it = vocabulary.find(name);
    return it != vocabulary.end() && it->second.kind == TermKind::TYPE;
}

bool Profile::has_property(const std::string &name) const {
    auto it = vocabulary.find(name);
    return it != vocabulary.end() && it->second.kind == TermKind::PROPERTY;
}

bool Profile::is_subtype_of(const std::string &name, const std::string &ancestor) const {
    if (name == ancestor)
        return true;
    auto it = vocabulary.find(name);
    if (it == vocabulary.end() || it->second.kind != TermKind::TYPE)
        return false;
    for (const std::string &parent : it->second.parents)
        if (is_subtype_of(parent, ancestor))
            return true;
    return false;
}

std::string Profile::expand_term(const std::string &name) const {
    const std::string &ns = pending_terms.count(name) ? context_namespace_pending : context_namespace_core;
    return ns + name;
}

namespace {

std::string require_string(const ordered_json &doc, const char *key, const std::string &where) {
    if (!doc.is_object() || !doc.contains(key) || !doc[key].is_string())
        throw MalformedRegistry("registry: " + where + " missing string field '" + key + "'");
    return doc[key].get<std::string>();
}

SourceElementRef parse_source(const ordered_json &doc, const std::string &where) {
    if (!doc.is_object() || !doc.contains("source"))
        throw MalformedRegistry("registry: " + where + " missing 'source'");
    const ordered_json &src = doc["source"];
    const std::string standard_name = require_string(src, "standard", where + ".source");
    auto standard = standard_from_string(standard_name);
    if (!standard)
        throw MalformedRegistry("registry: " + where + " unknown standard '" + standard_name + "'");
    SourceElementRef ref{*standard, require_string(src, "element_id", where + ".source")};
    if (ref.element_id.empty())
        throw MalformedRegistry("registry: " + where + " empty element_id");
    return ref;
}

std::vector<std::string> string_list(const ordered_json &doc, const char *key, const std::string &where) {
    std::vector<std::string> out;
    if (!doc.contains(key))
        return out;
    if (!doc[key].is_array())
        throw MalformedRegistry("registry: " + where + " field '" + key + "' must be an array");
    for (const auto &item : doc[key]) {
        if (!item.is_string())
            throw MalformedRegistry("registry: " + where + " field '" + key + "' must hold strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

} // namespace

Profile load_profile(std::string_view registry_doc, ModelVariant variant) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(registry_doc);
    } catch (const ordered_json::parse_error &e) {
        throw MalformedRegistry(std::string("registry: not parseable JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw MalformedRegistry("registry: top level must be an object");
    for (const char *key : {"vocabulary", "rules", "exclusions"})
        if (!doc.contains(key) || !doc[key].is_array())
            throw MalformedRegistry(std::string("registry: missing top-level array '") + key + "'");
    if (!doc.contains("variants") || !doc["variants"].is_object())
        throw MalformedRegistry("registry: missing top-level object 'variants'");

    Profile profile;
    profile.variant = variant;
    if (doc.contains("namespace_core"))
        profile.context_namespace_core = require_string(doc, "namespace_core", "top level");
    if (doc.contains("namespace_pending"))
        profile.context_namespace_pending = require_string(doc, "namespace_pending", "top level");
    for (const std::string &term : string_list(doc, "pending_terms", "top level"))
        profile.pending_terms.insert(term);

    for (const auto &entry : doc["vocabulary"]) {
        VocabularyTerm term;
        term.name = require_string(entry, "name", "vocabulary entry");
        const std::string kind = require_string(entry, "kind", "vocabulary '" + term.name + "'");
        if (kind == "TYPE") {
            term.kind = TermKind::TYPE;
            term.parents = string_list(entry, "parents", "vocabulary '" + term.name + "'");
        } else if (kind == "PROPERTY") {
            term.kind = TermKind::PROPERTY;
            term.domain_types = string_list(entry, "domain_types", "vocabulary '" + term.name + "'");
            const std::string range = require_string(entry, "range", "vocabulary '" + term.name + "'");
            if (range == "TEXT")
                term.range = Range::TEXT;
            else if (range == "INTEGER")
                term.range = Range::INTEGER;
            else if (range == "NODE_REF")
                term.range = Range::NODE_REF;
            else if (range == "DATE_TEXT")
                term.range = Range::DATE_TEXT;
            else
                throw MalformedRegistry("registry: vocabulary '" + term.name + "' unknown range '" + range + "'");
        } else {
            throw MalformedRegistry("registry: vocabulary '" + term.name + "' unknown kind '" + kind + "'");
        }
        if (profile.vocabulary.count(term.name))
            throw MalformedRegistry("registry: vocabulary term '" + term.name + "' declared twice");
        profile.vocabulary.emplace(term.name, std::move(term));
    }

    // Parent/domain references must land on declared terms.
    for (const auto &[name, term] : profile.vocabulary) {
        if (term.kind == TermKind::TYPE) {
            for (const std::string &parent : term.parents)
                if (!profile.has_type(parent))
                    throw UndeclaredTerm("registry: type '" + name + "' parent '" + parent + "' not declared");
        } else {
            for (const std::string &domain : term.domain_types)
                if (!profile.has_type(domain))
                    throw UndeclaredTerm("registry: property '" + name + "' domain '" + domain + "' not declared");
        }
    }

    // The type hierarchy must be acyclic for closure checks to terminate.
    for (const auto &[name, term] : profile.vocabulary) {
        if (term.kind != TermKind::TYPE)
            continue;
        std::set<std::string> seen{name};
        std::vector<std::string> frontier = term.parents;
        while (!frontier.empty()) {
            const std::string current = std::move(frontier.back());
            frontier.pop_back();
            if (current == name)
                throw MalformedRegistry("registry: type hierarchy cycle through '" + name + "'");
            if (!seen.insert(current).second)
                continue;
            const auto &parents = profile.vocabulary.at(current).parents;
            frontier.insert(frontier.end(), parents.begin(), parents.end());
        }
    }

    for (const auto &entry : doc["rules"]) {
        MappingRule rule;
        rule.source = parse_source(entry, "rule");
        rule.target_property = require_string(entry, "target_property", "rule " + to_string(rule.source));
        if (!profile.has_property(rule.target_property))
            throw UndeclaredTerm("registry: rule " + to_string(rule.source) + " targets undeclared property '" +
                                 rule.target_property + "'");
        rule.applies_to = string_list(entry, "applies_to", "rule " + to_string(rule.source));
        for (const std::string &type : rule.applies_to)
            if (!profile.has_type(type))
                throw UndeclaredTerm("registry: rule " + to_string(rule.source) + " applies_to undeclared type '" +
                                     type + "'");
        const std::string transform = require_string(entry, "transform", "rule " + to_string(rule.source));
        if (transform == "COPY_TEXT")
            rule.transform = Transform::COPY_TEXT;
        else if (transform == "COPY_DATE")
            rule.transform = Transform::COPY_DATE;
        else if (transform == "LINK_AGENT")
            rule.transform = Transform::LINK_AGENT;
        else if (transform == "LINK_REPOSITORY")
            rule.transform = Transform::LINK_REPOSITORY;
        else if (transform == "EXTENT_SPLIT")
            rule.transform = Transform::EXTENT_SPLIT;
        else
            throw MalformedRegistry("registry: rule " + to_string(rule.source) + " unknown transform '" + transform +
                                    "'");
        const std::string cardinality = require_string(entry, "cardinality", "rule " + to_string(rule.source));
        if (cardinality == "ONE")
            rule.cardinality = Cardinality::ONE;
        else if (cardinality == "MANY")
            rule.cardinality = Cardinality::MANY;
        else
            throw MalformedRegistry("registry: rule " + to_string(rule.source) + " unknown cardinality '" +
                                    cardinality + "'");
        if (profile.rule_index.count(rule.source))
            throw DuplicateSource("registry: source " + to_string(rule.source) + " appears in two rules");
        profile.rule_index.emplace(rule.source, profile.registry.size());
        profile.registry.push_back(std::move(rule));
    }

    for (const auto &entry : doc["exclusions"]) {
        GapEntry gap;
        gap.source = parse_source(entry, "exclusion");
        const std::string reason = require_string(entry, "reason", "exclusion " + to_string(gap.source));
        auto parsed = gap_reason_from_string(reason);
        if (!parsed)
            throw MalformedRegistry("registry: exclusion " + to_string(gap.source) + " unknown reason '" + reason +
                                    "'");
        gap.reason = *parsed;
        if (entry.contains("citation"))
            gap.citation = require_string(entry, "citation", "exclusion " + to_string(gap.source));
        if (gap.reason != GapReason::UNKNOWN && gap.citation.empty())
            throw MalformedRegistry("registry: exclusion " + to_string(gap.source) + " requires a citation");
        if (profile.rule_index.count(gap.source))
            throw DuplicateSource("registry: source " + to_string(gap.source) +
                                  " appears in both rules and exclusions");
        if (profile.exclusion_index.count(gap.source))
            throw DuplicateSource("registry: source " + to_string(gap.source) + " appears in two exclusions");
        profile.exclusion_index.emplace(gap.source, profile.exclusions.size());
        profile.exclusions.push_back(std::move(gap));
    }

    const ordered_json &variants = doc["variants"];
    if (variants.contains("initial")) {
        const ordered_json &initial = variants["initial"];
        profile.initial_names.root_type = require_string(initial, "root_type", "variants.initial");
        profile.initial_names.intermediate_type = require_string(initial, "intermediate_type", "variants.initial");
        profile.initial_names.leaf_type = require_string(initial, "leaf_type", "variants.initial");
        for (const std::string &name :
             {profile.initial_names.root_type, profile.initial_names.intermediate_type,
              profile.initial_names.leaf_type})
            if (!profile.has_type(name))
                throw UndeclaredTerm("registry: variants.initial names undeclared type '" + name + "'");
    }

    return profile;
}

Profile load_default_profile(ModelVariant variant) {
    return load_profile(default_registry_document(), variant);
}

LookupResult lookup(const Profile &profile, const SourceElementRef &source) {
    auto rule = profile.rule_index.find(source);
    if (rule != profile.rule_index.end())
        return profile.registry[rule->second];
    auto exclusion = profile.exclusion_index.find(source);
    if (exclusion != profile.exclusion_index.end())
        return profile.exclusions[exclusion->second];
    GapEntry unknown;
    unknown.source = source;
    unknown.reason = GapReason::UNKNOWN;
    return unknown;
}

std::vector<std::string> validate_node(const Profile &profile, const SchemaNode &node) {
    std::vector<std::string> out;
    for (const std::string &type : node.types)
        if (!profile.has_type(type))
            out.push_back(node.id + ": undeclared type '" + type + "'");
    for (const auto &[property, values] : node.properties) {
        auto it = profile.vocabulary.find(property);
        if (it == profile.vocabulary.end() || it->second.kind != TermKind::PROPERTY) {
            out.push_back(node.id + ": undeclared property '" + property + "'");
            continue;
        }
        const VocabularyTerm &term = it->second;
        if (!term.domain_types.empty()) {
            bool in_domain = false;
            for (const std::string &type : node.types)
                for (const std::string &domain : term.domain_types)
                    if (profile.is_subtype_of(type, domain)) {
                        in_domain = true;
                        break;
                    }
            if (!in_domain)
                out.push_back(node.id + ": property '" + property + "' outside its domain for types of this node");
        }
        for (const Value &value : values) {
            const bool is_text = std::holds_alternative<std::string>(value);
            const bool is_int = std::holds_alternative<std::int64_t>(value);
            const bool is_ref = std::holds_alternative<NodeRef>(value);
            bool ok = false;
            switch (term.range) {
            case Range::TEXT:
            case Range::DATE_TEXT:
                ok = is_text;
                break;
            case Range::INTEGER:
                ok = is_int;
                break;
            case Range::NODE_REF:
                ok = is_ref;
                break;
            }
            if (!ok)
                out.push_back(node.id + ": property '" + property + "' value does not match its declared range");
        }
    }
    return out;
}

} // namespace archemap
