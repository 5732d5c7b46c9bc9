/*
 * Copyright (c) 2026 the archemap authors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef ARCHEMAP_CROSSWALK_HPP
#define ARCHEMAP_CROSSWALK_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "archemap/model.hpp"
#include "archemap/profile.hpp"

namespace archemap {

/// Reference to another node in the same graph.
struct NodeRef {
    std::string iri;

    friend bool operator==(const NodeRef &, const NodeRef &) = default;
    friend auto operator<=>(const NodeRef &, const NodeRef &) = default;
};

/// A property value: text literal, integer literal, or node reference.
using Value = std::variant<std::string, std::int64_t, NodeRef>;

/// A typed linked-data node: absolute IRI, one or more vocabulary types,
/// and named property values (lists preserve insertion order).
struct SchemaNode {
    std::string id;
    std::vector<std::string> types;
    std::map<std::string, std::vector<Value>> properties;

    void add(const std::string &property, Value value);

    friend bool operator==(const SchemaNode &, const SchemaNode &) = default;
};

struct Graph {
    std::map<std::string, SchemaNode> nodes;

    friend bool operator==(const Graph &, const Graph &) = default;
};

struct ExcludedTally {
    GapEntry gap;
    std::size_t count = 0;
};

/// Conservation ledger for one conversion (or an aggregate of several):
/// every source-element occurrence is tallied as mapped, excluded, or
/// unknown; the three sections sum to the number of occurrences seen.
struct ConversionReport {
    std::map<SourceElementRef, std::size_t> mapped;
    std::map<SourceElementRef, ExcludedTally> excluded;
    std::map<SourceElementRef, std::size_t> unknown;
    std::size_t node_count = 0;
    std::size_t unit_count = 0;

    std::size_t total_tallies() const;
    void merge(const ConversionReport &other);
};

/// Deterministic positional IRI: root (empty path) is the base itself,
/// path [0,2] becomes base + "/c0/c2".
std::string assign_id(const std::string &base_uri, const std::vector<std::size_t> &path);

struct GapTally {
    GapEntry gap;
    std::size_t count = 1;
};

/// map_unit output: the node plus everything convert() needs to finish
/// wiring (tallies, creator agents to link, agent-routed note texts).
struct MapUnitResult {
    SchemaNode node;
    std::vector<GapTally> gaps;
    std::map<SourceElementRef, std::size_t> mapped;
    bool emit_extents = false;                        // extent ref resolved to a rule
    std::vector<AgentRecord> creator_agents;          // unit order, creators only
    std::vector<std::string> agent_description_texts; // notes routed to the first creator
};

/// Maps one unit's fields and notes through the profile registry. Emits
/// properties for rules, tallies for exclusions and unknowns; `level`
/// and `reference_code` always tally and never emit.
MapUnitResult map_unit(const ArchivalUnit &unit, const Profile &profile, const std::string &id,
                       bool is_root, bool is_leaf, SourceFormat source_format);

/// Adds hasPart (order preserved) on the parent and isPartOf on each
/// child. Throws DanglingReference when an IRI is absent from the graph.
void link_hierarchy(Graph &graph, const std::string &parent_id,
                    const std::vector<std::string> &child_ids);

/// Builds the ArchiveOrganization node (id base + "/repository") holding
/// the root; convert() adds the root's reverse holdingArchive link.
SchemaNode map_repository(const RepositoryRecord &repo, const Profile &profile,
                          const std::string &base_uri, const std::string &root_id);

/// Builds an agent node (id base + "/agents/a{seq}"); PERSON and FAMILY
/// become Person, CORPORATE_BODY becomes Organization.
SchemaNode map_agent(const AgentRecord &agent, const Profile &profile,
                     const std::string &base_uri, std::size_t seq);

/// Applies one extent statement: TEXTUAL appends to materialExtent; COUNT
/// appends to collectionSize when the node is Collection-typed (by
/// vocabulary closure), otherwise to materialExtent as "{count} {label}".
SchemaNode map_extent(const ExtentStatement &extent, SchemaNode node, const Profile &profile);

struct ConvertResult {
    Graph graph;
    ConversionReport report;
};

/// Full crosswalk of a validated tree: units, hierarchy links, agents
/// (deduplicated by name+kind), repository, conservation report.
/// Throws InvalidTree when validate_tree(tree) is non-empty.
ConvertResult convert(const DescriptionTree &tree, const Profile &profile,
                      const std::string &base_uri);

} // namespace archemap

#endif
