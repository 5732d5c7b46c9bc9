/*
 * Copyright (c) 2026 the archemap authors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "archemap/crosswalk.hpp"

#include <algorithm>
#include <functional>

#include "archemap/errors.hpp"

namespace archemap {

void SchemaNode::add(const std::string &property, Value value) {
    properties[property].push_back(std::move(value));
}

std::size_t ConversionReport::total_tallies() const {
    std::size_t total = 0;
    for (const auto &[ref, count] : mapped)
        total += count;
    for (const auto &[ref, tally] : excluded)
        total += tally.count;
    for (const auto &[ref, count] : unknown)
        total += count;
    return total;
}

void ConversionReport::merge(const ConversionReport &other) {
    for (const auto &[ref, count] : other.mapped)
        mapped[ref] += count;
    for (const auto &[ref, tally] : other.excluded) {
        auto [it, inserted] = excluded.emplace(ref, tally);
        if (!inserted)
            it->second.count += tally.count;
    }
    for (const auto &[ref, count] : other.unknown)
        unknown[ref] += count;
    node_count += other.node_count;
    unit_count += other.unit_count;
}

std::string assign_id(const std::string &base_uri, const std::vector<std::size_t> &path) {
    std::string id = base_uri;
    for (std::size_t index : path)
        id += "/c" + std::to_string(index);
    return id;
}

namespace {

// Per-format refs for unit fields the model keeps as plain data. Notes
// carry their own refs from ingest.
struct FieldRefs {
    SourceElementRef title;
    SourceElementRef dates;
    SourceElementRef extent;
    SourceElementRef agent;
    SourceElementRef language;
    SourceElementRef level;
    SourceElementRef reference_code;
    SourceElementRef repository;
};

FieldRefs field_refs(SourceFormat format) {
    if (format == SourceFormat::EAD)
        return {
            {Standard::EAD, "unittitle"},     {Standard::EAD, "unitdate"}, {Standard::EAD, "physdesc/extent"},
            {Standard::EAD, "origination"},   {Standard::EAD, "langmaterial"}, {Standard::EAD, "@level"},
            {Standard::EAD, "unitid"},        {Standard::EAD, "repository"},
        };
    return {
        {Standard::ASPACE, "title"},         {Standard::ASPACE, "dates"}, {Standard::ASPACE, "extents"},
        {Standard::ASPACE, "linked_agents"}, {Standard::ASPACE, "languages"}, {Standard::ASPACE, "level"},
        {Standard::ASPACE, "id_0"},          {Standard::ASPACE, "repository"},
    };
}

bool collection_typed(const SchemaNode &node, const Profile &profile) {
    return std::any_of(node.types.begin(), node.types.end(),
                       [&](const std::string &type) { return profile.is_subtype_of(type, "Collection"); });
}

// A rule whose applies_to names only agent types targets the linked
// agent node instead of the unit (the bioghist pattern).
bool targets_agent(const MappingRule &rule, const Profile &profile) {
    if (rule.applies_to.empty())
        return false;
    return std::all_of(rule.applies_to.begin(), rule.applies_to.end(), [&](const std::string &type) {
        return profile.is_subtype_of(type, "Person") || profile.is_subtype_of(type, "Organization");
    });
}

GapEntry synthesized_unknown(const SourceElementRef &ref) {
    GapEntry gap;
    gap.source = ref;
    gap.reason = GapReason::UNKNOWN;
    return gap;
}

void tally_lookup(MapUnitResult &result, const Profile &profile, const SourceElementRef &ref,
                  const std::function<void(const MappingRule &)> &apply) {
    const LookupResult found = lookup(profile, ref);
    if (const auto *rule = std::get_if<MappingRule>(&found)) {
        apply(*rule);
    } else {
        result.gaps.push_back({std::get<GapEntry>(found), 1});
    }
}

} // namespace

MapUnitResult map_unit(const ArchivalUnit &unit, const Profile &profile, const std::string &id, bool is_root,
                       bool is_leaf, SourceFormat source_format) {
    MapUnitResult result;
    result.node.id = id;

    if (profile.variant == ModelVariant::ALTERNATIVE) {
        result.node.types = {"ArchiveComponent", is_root ? "Collection" : "CreativeWork"};
    } else {
        const InitialTypeNames &names = profile.initial_names;
        result.node.types = {is_root ? names.root_type : (is_leaf ? names.leaf_type : names.intermediate_type)};
    }

    const FieldRefs refs = field_refs(source_format);

    if (unit.title) {
        tally_lookup(result, profile, refs.title, [&](const MappingRule &rule) {
            result.node.add(rule.target_property, *unit.title);
            result.mapped[refs.title] += 1;
        });
    }
    if (unit.dates) {
        tally_lookup(result, profile, refs.dates, [&](const MappingRule &rule) {
            result.node.add(rule.target_property, *unit.dates);
            result.mapped[refs.dates] += 1;
        });
    }
    if (unit.level) {
        const LookupResult found = lookup(profile, refs.level);
        if (const auto *gap = std::get_if<GapEntry>(&found))
            result.gaps.push_back({*gap, 1});
        else
            result.gaps.push_back({synthesized_unknown(refs.level), 1}); // level never emits
    }
    if (unit.reference_code) {
        const LookupResult found = lookup(profile, refs.reference_code);
        if (const auto *gap = std::get_if<GapEntry>(&found))
            result.gaps.push_back({*gap, 1});
        else
            result.gaps.push_back({synthesized_unknown(refs.reference_code), 1});
    }

    // Extent occurrences tally here; convert() emits values via map_extent
    // once the node's final types are known, and only when a rule exists.
    for (std::size_t i = 0; i < unit.extents.size(); ++i) {
        tally_lookup(result, profile, refs.extent, [&](const MappingRule &) {
            result.mapped[refs.extent] += 1;
            result.emit_extents = true;
        });
    }

    for (const std::string &language : unit.languages) {
        tally_lookup(result, profile, refs.language, [&](const MappingRule &rule) {
            result.node.add(rule.target_property, language);
            result.mapped[refs.language] += 1;
        });
    }

    for (const AgentRecord &agent : unit.agents) {
        if (agent.role == AgentRole::SUBJECT) {
            SourceElementRef ref = refs.agent;
            ref.element_id += ".subject";
            result.gaps.push_back({synthesized_unknown(ref), 1});
            continue;
        }
        result.creator_agents.push_back(agent);
        if (agent.agent_kind == AgentKind::FAMILY) {
            // The family kind has no faithful type; the approximation is
            // surfaced as an unknown tally instead of a mapped one.
            SourceElementRef ref = refs.agent;
            ref.element_id += ".family";
            result.gaps.push_back({synthesized_unknown(ref), 1});
        } else {
            tally_lookup(result, profile, refs.agent,
                         [&](const MappingRule &) { result.mapped[refs.agent] += 1; });
        }
    }

    for (const NoteField &note : unit.notes) {
        const LookupResult found = lookup(profile, note.ref);
        if (const auto *rule = std::get_if<MappingRule>(&found)) {
            if (targets_agent(*rule, profile)) {
                const bool has_creator =
                    std::any_of(unit.agents.begin(), unit.agents.end(),
                                [](const AgentRecord &agent) { return agent.role == AgentRole::CREATOR; });
                if (has_creator) {
                    result.agent_description_texts.push_back(note.text);
                    result.mapped[note.ref] += 1;
                } else {
                    // Nothing to attach the agent note to.
                    result.gaps.push_back({synthesized_unknown(note.ref), 1});
                }
            } else {
                result.node.add(rule->target_property, note.text);
                result.mapped[note.ref] += 1;
            }
        } else {
            result.gaps.push_back({std::get<GapEntry>(found), 1});
        }
    }

    for (const SourceElementRef &ref : unit.extra_elements) {
        const LookupResult found = lookup(profile, ref);
        if (const auto *gap = std::get_if<GapEntry>(&found))
            result.gaps.push_back({*gap, 1});
        else
            result.gaps.push_back({synthesized_unknown(ref), 1}); // rules cannot apply to bare refs
    }

    return result;
}

void link_hierarchy(Graph &graph, const std::string &parent_id, const std::vector<std::string> &child_ids) {
    auto parent = graph.nodes.find(parent_id);
    if (parent == graph.nodes.end())
        throw DanglingReference("link_hierarchy: parent " + parent_id + " not in graph");
    for (const std::string &child_id : child_ids)
        if (!graph.nodes.count(child_id))
            throw DanglingReference("link_hierarchy: child " + child_id + " not in graph");
    for (const std::string &child_id : child_ids) {
        parent->second.add("hasPart", NodeRef{child_id});
        graph.nodes[child_id].add("isPartOf", NodeRef{parent_id});
    }
}

SchemaNode map_repository(const RepositoryRecord &repo, const Profile &profile, const std::string &base_uri,
                          const std::string &root_id) {
    (void)profile;
    SchemaNode node;
    node.id = base_uri + "/repository";
    node.types = {"ArchiveOrganization"};
    node.add("name", repo.name);
    if (repo.address)
        node.add("address", *repo.address);
    if (repo.url)
        node.add("url", *repo.url);
    node.add("archiveHeld", NodeRef{root_id});
    return node;
}

SchemaNode map_agent(const AgentRecord &agent, const Profile &profile, const std::string &base_uri,
                     std::size_t seq) {
    (void)profile;
    SchemaNode node;
    node.id = base_uri + "/agents/a" + std::to_string(seq);
    node.types = {agent.agent_kind == AgentKind::CORPORATE_BODY ? "Organization" : "Person"};
    node.add("name", agent.name);
    if (agent.dates_of_existence)
        node.add("description", "Dates of existence: " + *agent.dates_of_existence);
    return node;
}

SchemaNode map_extent(const ExtentStatement &extent, SchemaNode node, const Profile &profile) {
    if (extent.kind == ExtentKind::TEXTUAL) {
        node.add("materialExtent", extent.text.value_or(""));
        return node;
    }
    const std::uint64_t count = extent.count.value_or(0);
    if (collection_typed(node, profile)) {
        node.add("collectionSize", static_cast<std::int64_t>(count));
        return node;
    }
    std::string text = std::to_string(count);
    if (extent.unit_label && !extent.unit_label->empty())
        text += " " + *extent.unit_label;
    node.add("materialExtent", text);
    return node;
}

ConvertResult convert(const DescriptionTree &tree, const Profile &profile, const std::string &base_uri) {
    {
        const std::vector<std::string> violations = validate_tree(tree);
        if (!violations.empty()) {
            std::string message = "invalid tree: " + violations.front();
            if (violations.size() > 1)
                message += " (+" + std::to_string(violations.size() - 1) + " more)";
            throw InvalidTree(message);
        }
    }

    ConvertResult result;
    Graph &graph = result.graph;
    ConversionReport &report = result.report;

    const std::vector<FlatUnit> units = flatten(tree);
    report.unit_count = units.size();

    // Agents are deduplicated graph-wide by (name, kind), numbered in
    // first-encounter order.
    std::map<std::pair<std::string, AgentKind>, std::string> agent_ids;
    std::vector<std::pair<std::string, AgentRecord>> agent_order; // id, first record

    struct PendingUnit {
        std::string id;
        std::vector<std::string> creator_ids;
        std::vector<std::string> agent_texts;
        std::vector<std::size_t> path;
    };
    std::vector<PendingUnit> pending;
    pending.reserve(units.size());

    for (const FlatUnit &flat : units) {
        const std::string id = assign_id(base_uri, flat.path);
        MapUnitResult mapped = map_unit(*flat.unit, profile, id, flat.path.empty(), flat.unit->children.empty(),
                                        tree.source_format);
        for (const auto &[ref, count] : mapped.mapped)
            report.mapped[ref] += count;
        for (const GapTally &tally : mapped.gaps) {
            if (tally.gap.reason == GapReason::UNKNOWN) {
                report.unknown[tally.gap.source] += tally.count;
            } else {
                auto [it, inserted] = report.excluded.emplace(tally.gap.source, ExcludedTally{tally.gap, tally.count});
                if (!inserted)
                    it->second.count += tally.count;
            }
        }

        SchemaNode node = std::move(mapped.node);
        if (mapped.emit_extents)
            for (const ExtentStatement &extent : flat.unit->extents)
                node = map_extent(extent, std::move(node), profile);

        PendingUnit pending_unit;
        pending_unit.id = id;
        pending_unit.path = flat.path;
        for (const AgentRecord &agent : mapped.creator_agents) {
            const auto key = std::make_pair(agent.name, agent.agent_kind);
            auto it = agent_ids.find(key);
            if (it == agent_ids.end()) {
                const std::string agent_id = base_uri + "/agents/a" + std::to_string(agent_order.size());
                it = agent_ids.emplace(key, agent_id).first;
                agent_order.emplace_back(agent_id, agent);
            }
            if (std::find(pending_unit.creator_ids.begin(), pending_unit.creator_ids.end(), it->second) ==
                pending_unit.creator_ids.end())
                pending_unit.creator_ids.push_back(it->second);
        }
        pending_unit.agent_texts = std::move(mapped.agent_description_texts);
        pending.push_back(std::move(pending_unit));

        graph.nodes.emplace(node.id, std::move(node));
    }

    for (std::size_t i = 0; i < agent_order.size(); ++i)
        graph.nodes.emplace(agent_order[i].first, map_agent(agent_order[i].second, profile, base_uri, i));

    for (const PendingUnit &pending_unit : pending) {
        SchemaNode &node = graph.nodes.at(pending_unit.id);
        for (const std::string &creator_id : pending_unit.creator_ids)
            node.add("creator", NodeRef{creator_id});
        if (!pending_unit.agent_texts.empty() && !pending_unit.creator_ids.empty()) {
            SchemaNode &agent_node = graph.nodes.at(pending_unit.creator_ids.front());
            for (const std::string &text : pending_unit.agent_texts)
                agent_node.add("description", text);
        }
    }

    // hasPart/isPartOf per parent, children in document order.
    for (const FlatUnit &flat : units) {
        if (flat.unit->children.empty())
            continue;
        std::vector<std::string> child_ids;
        child_ids.reserve(flat.unit->children.size());
        std::vector<std::size_t> child_path = flat.path;
        for (std::size_t i = 0; i < flat.unit->children.size(); ++i) {
            child_path.push_back(i);
            child_ids.push_back(assign_id(base_uri, child_path));
            child_path.pop_back();
        }
        link_hierarchy(graph, assign_id(base_uri, flat.path), child_ids);
    }

    const std::string root_id = assign_id(base_uri, {});
    SchemaNode repository_node = map_repository(tree.repository, profile, base_uri, root_id);
    const std::string repository_id = repository_node.id;
    graph.nodes.emplace(repository_id, std::move(repository_node));
    graph.nodes.at(root_id).add("holdingArchive", NodeRef{repository_id});
    {
        const FieldRefs refs = field_refs(tree.source_format);
        const LookupResult found = lookup(profile, refs.repository);
        if (std::holds_alternative<MappingRule>(found))
            report.mapped[refs.repository] += 1;
        else
            report.unknown[refs.repository] += 1;
    }

    report.node_count = graph.nodes.size();
    return result;
}

} // namespace archemap
