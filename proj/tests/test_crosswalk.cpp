/*
 * Copyright (c) 2026 the archemap authors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "archemap/crosswalk.hpp"
#include "archemap/emit.hpp"
#include "archemap/errors.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace archemap;

namespace {

Profile alt_profile() { return load_default_profile(ModelVariant::ALTERNATIVE); }

DescriptionTree four_unit_tree() {
    // root + 2 series, the first with 1 file; 1 creator; repository
    DescriptionTree tree;
    tree.source_format = SourceFormat::EAD;
    tree.repository.name = "Rice Archives";
    tree.root.title = "Smith Papers";
    tree.root.agents.push_back({"Ada Smith", AgentKind::PERSON, std::nullopt, AgentRole::CREATOR});
    ArchivalUnit series1;
    series1.title = "Series 1";
    ArchivalUnit file1;
    file1.title = "File 1";
    series1.children.push_back(file1);
    ArchivalUnit series2;
    series2.title = "Series 2";
    tree.root.children.push_back(series1);
    tree.root.children.push_back(series2);
    return tree;
}

std::map<std::string, std::size_t> property_multiset(const Graph &graph) {
    std::map<std::string, std::size_t> out;
    for (const auto &[id, node] : graph.nodes)
        for (const auto &[property, values] : node.properties)
            out[property] += values.size();
    return out;
}

bool is_type_triple(const Triple &triple) { return triple.predicate == kRdfType; }

} // namespace

TEST_CASE("assign_id builds positional IRIs") {
    CHECK(assign_id("https://ex.org/f1", {}) == "https://ex.org/f1");
    CHECK(assign_id("https://ex.org/f1", {0, 2}) == "https://ex.org/f1/c0/c2");
    CHECK(assign_id("https://ex.org/f1", {1}) != assign_id("https://ex.org/f1", {0, 1}));
}

TEST_CASE("map_unit types a titled root per the ALTERNATIVE variant") {
    const Profile profile = alt_profile();
    ArchivalUnit unit;
    unit.title = "Smith Papers";
    const MapUnitResult result = map_unit(unit, profile, "https://ex.org/f1", true, true, SourceFormat::EAD);
    CHECK(result.node.types == std::vector<std::string>{"ArchiveComponent", "Collection"});
    REQUIRE(result.node.properties.count("name"));
    CHECK(result.node.properties.at("name") == std::vector<Value>{Value{std::string("Smith Papers")}});
    CHECK(result.gaps.empty());
}

TEST_CASE("map_unit maps an empty unit to id and types only") {
    const Profile profile = alt_profile();
    const MapUnitResult result = map_unit({}, profile, "https://ex.org/f1/c0", false, true, SourceFormat::EAD);
    CHECK(result.node.id == "https://ex.org/f1/c0");
    CHECK(result.node.types == std::vector<std::string>{"ArchiveComponent", "CreativeWork"});
    CHECK(result.node.properties.empty());
    CHECK(result.gaps.empty());
    CHECK(result.mapped.empty());
}

TEST_CASE("an appraisal note emits no property and one NO_MAPPING_IDENTIFIED tally") {
    const Profile profile = alt_profile();
    ArchivalUnit unit;
    unit.notes.push_back({{Standard::EAD, "appraisal"}, "Weeded in 1990", std::nullopt});
    const MapUnitResult result = map_unit(unit, profile, "https://ex.org/f1", true, true, SourceFormat::EAD);
    CHECK(result.node.properties.empty());
    REQUIRE(result.gaps.size() == 1);
    CHECK(result.gaps[0].gap.reason == GapReason::NO_MAPPING_IDENTIFIED);
    CHECK(result.gaps[0].gap.source == SourceElementRef{Standard::EAD, "appraisal"});
}

TEST_CASE("level and reference_code tally their exclusions and never emit") {
    const Profile profile = alt_profile();
    ArchivalUnit unit;
    unit.level = "fonds";
    unit.reference_code = "MS-042";
    const MapUnitResult result = map_unit(unit, profile, "https://ex.org/f1", true, true, SourceFormat::EAD);
    CHECK(result.node.properties.empty());
    REQUIRE(result.gaps.size() == 2);
    CHECK(result.gaps[0].gap.reason == GapReason::EXCLUDED_LEVEL);
    CHECK(result.gaps[1].gap.reason == GapReason::EXCLUDED_REFERENCE_CODE);
}

TEST_CASE("link_hierarchy wires hasPart and isPartOf in order") {
    Graph graph;
    for (const char *id : {"https://ex.org/P", "https://ex.org/A", "https://ex.org/B"}) {
        SchemaNode node;
        node.id = id;
        node.types = {"ArchiveComponent", "CreativeWork"};
        graph.nodes.emplace(node.id, node);
    }
    link_hierarchy(graph, "https://ex.org/P", {"https://ex.org/A", "https://ex.org/B"});
    CHECK(graph.nodes.at("https://ex.org/P").properties.at("hasPart") ==
          std::vector<Value>{Value{NodeRef{"https://ex.org/A"}}, Value{NodeRef{"https://ex.org/B"}}});
    CHECK(graph.nodes.at("https://ex.org/A").properties.at("isPartOf") ==
          std::vector<Value>{Value{NodeRef{"https://ex.org/P"}}});
    CHECK(graph.nodes.at("https://ex.org/B").properties.at("isPartOf") ==
          std::vector<Value>{Value{NodeRef{"https://ex.org/P"}}});
}

TEST_CASE("link_hierarchy with no children changes nothing") {
    Graph graph;
    SchemaNode node;
    node.id = "https://ex.org/P";
    node.types = {"ArchiveComponent"};
    graph.nodes.emplace(node.id, node);
    const Graph before = graph;
    link_hierarchy(graph, "https://ex.org/P", {});
    CHECK(graph == before);
}

TEST_CASE("link_hierarchy rejects IRIs missing from the graph") {
    Graph graph;
    SchemaNode node;
    node.id = "https://ex.org/P";
    graph.nodes.emplace(node.id, node);
    CHECK_THROWS_AS(link_hierarchy(graph, "https://ex.org/P", {"https://ex.org/missing"}), DanglingReference);
    CHECK_THROWS_AS(link_hierarchy(graph, "https://ex.org/missing", {}), DanglingReference);
}

TEST_CASE("a chain reaches the root in exactly two isPartOf hops") {
    DescriptionTree tree;
    tree.repository.name = "A";
    tree.root.title = "P";
    ArchivalUnit a;
    a.title = "A";
    ArchivalUnit b;
    b.title = "B";
    a.children.push_back(b);
    tree.root.children.push_back(a);
    const Profile profile = alt_profile();
    const ConvertResult result = convert(tree, profile, "https://ex.org/chain");

    // brute-force walk from the leaf
    std::string at = "https://ex.org/chain/c0/c0";
    std::size_t hops = 0;
    while (true) {
        const SchemaNode &node = result.graph.nodes.at(at);
        auto it = node.properties.find("isPartOf");
        if (it == node.properties.end())
            break;
        REQUIRE(it->second.size() == 1);
        at = std::get<NodeRef>(it->second[0]).iri;
        ++hops;
    }
    CHECK(hops == 2);
    CHECK(at == "https://ex.org/chain");
}

TEST_CASE("map_repository builds the holding organization with the reverse link added by convert") {
    const Profile profile = alt_profile();
    RepositoryRecord repo;
    repo.name = "Rice Archives";
    const SchemaNode node = map_repository(repo, profile, "https://ex.org/f1", "https://ex.org/f1");
    CHECK(node.id == "https://ex.org/f1/repository");
    CHECK(node.types == std::vector<std::string>{"ArchiveOrganization"});
    CHECK(node.properties.at("name") == std::vector<Value>{Value{std::string("Rice Archives")}});
    CHECK(node.properties.at("archiveHeld") == std::vector<Value>{Value{NodeRef{"https://ex.org/f1"}}});

    DescriptionTree tree;
    tree.repository = repo;
    tree.root.title = "Smith Papers";
    const ConvertResult converted = convert(tree, profile, "https://ex.org/f1");
    CHECK(converted.graph.nodes.at("https://ex.org/f1").properties.at("holdingArchive") ==
          std::vector<Value>{Value{NodeRef{"https://ex.org/f1/repository"}}});
}

TEST_CASE("repository url passes through") {
    const Profile profile = alt_profile();
    RepositoryRecord repo;
    repo.name = "Rice Archives";
    repo.url = "https://archives.rice.example.org";
    const SchemaNode node = map_repository(repo, profile, "https://ex.org/f1", "https://ex.org/f1");
    CHECK(node.properties.at("url") ==
          std::vector<Value>{Value{std::string("https://archives.rice.example.org")}});
}

TEST_CASE("map_agent types people and organizations") {
    const Profile profile = alt_profile();
    const SchemaNode person =
        map_agent({"Ada Smith", AgentKind::PERSON, std::nullopt, AgentRole::CREATOR}, profile, "https://ex.org/f1", 0);
    CHECK(person.id == "https://ex.org/f1/agents/a0");
    CHECK(person.types == std::vector<std::string>{"Person"});
    CHECK(person.properties.at("name") == std::vector<Value>{Value{std::string("Ada Smith")}});

    const SchemaNode org = map_agent({"Acme Co.", AgentKind::CORPORATE_BODY, std::nullopt, AgentRole::CREATOR},
                                     profile, "https://ex.org/f1", 1);
    CHECK(org.types == std::vector<std::string>{"Organization"});
    CHECK(org.id == "https://ex.org/f1/agents/a1");

    const SchemaNode dated = map_agent({"Ada Smith", AgentKind::PERSON, "1890-1960", AgentRole::CREATOR}, profile,
                                       "https://ex.org/f1", 2);
    CHECK(dated.properties.at("description") ==
          std::vector<Value>{Value{std::string("Dates of existence: 1890-1960")}});
}

TEST_CASE("a family agent becomes a Person node plus one unknown tally") {
    const Profile profile = alt_profile();
    const SchemaNode node = map_agent({"Smith family", AgentKind::FAMILY, std::nullopt, AgentRole::CREATOR}, profile,
                                      "https://ex.org/f1", 0);
    CHECK(node.types == std::vector<std::string>{"Person"});

    ArchivalUnit unit;
    unit.agents.push_back({"Smith family", AgentKind::FAMILY, std::nullopt, AgentRole::CREATOR});
    const MapUnitResult result = map_unit(unit, profile, "https://ex.org/f1", true, true, SourceFormat::EAD);
    REQUIRE(result.gaps.size() == 1);
    CHECK(result.gaps[0].gap.reason == GapReason::UNKNOWN);
    CHECK(result.gaps[0].gap.source == SourceElementRef{Standard::EAD, "origination.family"});
    CHECK(result.creator_agents.size() == 1);
    CHECK(result.mapped.empty());
}

TEST_CASE("subject agents are tallied unknown and not linked") {
    const Profile profile = alt_profile();
    ArchivalUnit unit;
    unit.agents.push_back({"Topic Person", AgentKind::PERSON, std::nullopt, AgentRole::SUBJECT});
    const MapUnitResult result = map_unit(unit, profile, "https://ex.org/f1", true, true, SourceFormat::ASPACE);
    CHECK(result.creator_agents.empty());
    REQUIRE(result.gaps.size() == 1);
    CHECK(result.gaps[0].gap.source == SourceElementRef{Standard::ASPACE, "linked_agents.subject"});
}

TEST_CASE("map_extent routes text, collection counts, and fallback counts") {
    const Profile profile = alt_profile();
    SchemaNode collection;
    collection.id = "https://ex.org/f1";
    collection.types = {"ArchiveComponent", "Collection"};

    SchemaNode item = collection;
    item.types = {"ArchiveComponent", "CreativeWork"};

    const SchemaNode with_text = map_extent(ExtentStatement::textual("12 linear feet"), collection, profile);
    CHECK(with_text.properties.at("materialExtent") == std::vector<Value>{Value{std::string("12 linear feet")}});

    const SchemaNode with_count = map_extent(ExtentStatement::counted(3400, "items"), collection, profile);
    CHECK(with_count.properties.at("collectionSize") == std::vector<Value>{Value{std::int64_t{3400}}});
    CHECK_FALSE(with_count.properties.count("materialExtent"));

    const SchemaNode fallback = map_extent(ExtentStatement::counted(0, "items"), item, profile);
    CHECK(fallback.properties.at("materialExtent") == std::vector<Value>{Value{std::string("0 items")}});
    CHECK_FALSE(fallback.properties.count("collectionSize"));
}

TEST_CASE("the INITIAL root also takes collectionSize through the type closure") {
    const Profile profile = load_default_profile(ModelVariant::INITIAL);
    SchemaNode root;
    root.id = "https://ex.org/f1";
    root.types = {"ArchiveCollection"};
    const SchemaNode sized = map_extent(ExtentStatement::counted(3400, "items"), root, profile);
    CHECK(sized.properties.at("collectionSize") == std::vector<Value>{Value{std::int64_t{3400}}});
}

TEST_CASE("convert produces the expected 6-node graph for the 4-unit fixture") {
    const Profile profile = alt_profile();
    const DescriptionTree tree = four_unit_tree();
    const ConvertResult result = convert(tree, profile, "https://ex.org/f1");

    CHECK(result.report.unit_count == 4);
    CHECK(result.report.node_count == 6);
    CHECK(result.graph.nodes.size() == 6);

    // hand-built expected graph, compared via graphs_equal
    Graph expected;
    SchemaNode root;
    root.id = "https://ex.org/f1";
    root.types = {"ArchiveComponent", "Collection"};
    root.add("name", std::string("Smith Papers"));
    root.add("creator", NodeRef{"https://ex.org/f1/agents/a0"});
    root.add("hasPart", NodeRef{"https://ex.org/f1/c0"});
    root.add("hasPart", NodeRef{"https://ex.org/f1/c1"});
    root.add("holdingArchive", NodeRef{"https://ex.org/f1/repository"});
    expected.nodes.emplace(root.id, root);

    SchemaNode series1;
    series1.id = "https://ex.org/f1/c0";
    series1.types = {"ArchiveComponent", "CreativeWork"};
    series1.add("name", std::string("Series 1"));
    series1.add("isPartOf", NodeRef{"https://ex.org/f1"});
    series1.add("hasPart", NodeRef{"https://ex.org/f1/c0/c0"});
    expected.nodes.emplace(series1.id, series1);

    SchemaNode file1;
    file1.id = "https://ex.org/f1/c0/c0";
    file1.types = {"ArchiveComponent", "CreativeWork"};
    file1.add("name", std::string("File 1"));
    file1.add("isPartOf", NodeRef{"https://ex.org/f1/c0"});
    expected.nodes.emplace(file1.id, file1);

    SchemaNode series2;
    series2.id = "https://ex.org/f1/c1";
    series2.types = {"ArchiveComponent", "CreativeWork"};
    series2.add("name", std::string("Series 2"));
    series2.add("isPartOf", NodeRef{"https://ex.org/f1"});
    expected.nodes.emplace(series2.id, series2);

    SchemaNode agent;
    agent.id = "https://ex.org/f1/agents/a0";
    agent.types = {"Person"};
    agent.add("name", std::string("Ada Smith"));
    expected.nodes.emplace(agent.id, agent);

    SchemaNode repository;
    repository.id = "https://ex.org/f1/repository";
    repository.types = {"ArchiveOrganization"};
    repository.add("name", std::string("Rice Archives"));
    repository.add("archiveHeld", NodeRef{"https://ex.org/f1"});
    expected.nodes.emplace(repository.id, repository);

    CHECK(graphs_equal(result.graph, expected, profile));
}

TEST_CASE("a fonds-level tree emits no level data and tallies the exclusion") {
    const Profile profile = alt_profile();
    DescriptionTree tree = four_unit_tree();
    tree.root.level = "fonds";
    const ConvertResult result = convert(tree, profile, "https://ex.org/f1");
    const SourceElementRef level_ref{Standard::EAD, "@level"};
    REQUIRE(result.report.excluded.count(level_ref));
    CHECK(result.report.excluded.at(level_ref).count >= 1);
    CHECK(result.report.excluded.at(level_ref).gap.reason == GapReason::EXCLUDED_LEVEL);
    for (const Triple &triple : to_triples(result.graph, profile)) {
        if (const auto *text = std::get_if<TextLiteral>(&triple.object))
            CHECK(text->value.find("fonds") == std::string::npos);
        CHECK(triple.predicate.find("level") == std::string::npos);
    }
}

TEST_CASE("convert is deterministic") {
    const Profile profile = alt_profile();
    const DescriptionTree tree = four_unit_tree();
    const ConvertResult first = convert(tree, profile, "https://ex.org/f1");
    const ConvertResult second = convert(tree, profile, "https://ex.org/f1");
    CHECK(first.graph == second.graph);
    CHECK(first.report.mapped == second.report.mapped);
    CHECK(first.report.unknown == second.report.unknown);
    CHECK(serialize_jsonld(first.graph, profile) == serialize_jsonld(second.graph, profile));
}

TEST_CASE("convert refuses an invalid tree") {
    const Profile profile = alt_profile();
    DescriptionTree tree = four_unit_tree();
    tree.repository.name = "";
    CHECK_THROWS_AS(convert(tree, profile, "https://ex.org/f1"), InvalidTree);
}

TEST_CASE("agents deduplicate graph-wide by name and kind") {
    const Profile profile = alt_profile();
    DescriptionTree tree = four_unit_tree();
    tree.root.children[0].agents.push_back({"Ada Smith", AgentKind::PERSON, std::nullopt, AgentRole::CREATOR});
    tree.root.children[1].agents.push_back({"Ada Smith", AgentKind::CORPORATE_BODY, std::nullopt, AgentRole::CREATOR});
    const ConvertResult result = convert(tree, profile, "https://ex.org/f1");
    // same (name, kind) collapses; different kind does not
    CHECK(result.report.node_count == 4 + 2 + 1);
    CHECK(result.graph.nodes.at("https://ex.org/f1/c0").properties.at("creator") ==
          std::vector<Value>{Value{NodeRef{"https://ex.org/f1/agents/a0"}}});
    CHECK(result.graph.nodes.at("https://ex.org/f1/c1").properties.at("creator") ==
          std::vector<Value>{Value{NodeRef{"https://ex.org/f1/agents/a1"}}});
}

TEST_CASE("bioghist notes land on the first creator agent") {
    const Profile profile = alt_profile();
    DescriptionTree tree = four_unit_tree();
    tree.root.notes.push_back({{Standard::EAD, "bioghist"}, "Founded the company in 1900.", std::nullopt});
    const ConvertResult result = convert(tree, profile, "https://ex.org/f1");
    CHECK(result.graph.nodes.at("https://ex.org/f1/agents/a0").properties.at("description") ==
          std::vector<Value>{Value{std::string("Founded the company in 1900.")}});
    CHECK_FALSE(result.graph.nodes.at("https://ex.org/f1").properties.count("description"));
    CHECK(result.report.mapped.at({Standard::EAD, "bioghist"}) == 1);
}

TEST_CASE("a bioghist with no creator agent tallies unknown instead of guessing") {
    const Profile profile = alt_profile();
    DescriptionTree tree;
    tree.repository.name = "A";
    tree.root.title = "T";
    tree.root.notes.push_back({{Standard::EAD, "bioghist"}, "Orphan history.", std::nullopt});
    const ConvertResult result = convert(tree, profile, "https://ex.org/bio");
    CHECK(result.report.unknown.at({Standard::EAD, "bioghist"}) == 1);
    for (const auto &[id, node] : result.graph.nodes)
        for (const auto &[property, values] : node.properties)
            for (const Value &value : values)
                if (const auto *text = std::get_if<std::string>(&value))
                    CHECK(text->find("Orphan history") == std::string::npos);
}

TEST_CASE("a profile that excludes extents emits no extent properties") {
    // shipped registry with the EAD extent rule swapped for an exclusion
    std::string doc(default_registry_document());
    const std::string rule = R"({ "source": { "standard": "EAD", "element_id": "physdesc/extent" }, "target_property": "materialExtent", "applies_to": ["CreativeWork"], "transform": "EXTENT_SPLIT", "cardinality": "MANY" },)";
    const auto at = doc.find(rule);
    REQUIRE(at != std::string::npos);
    doc.erase(at, rule.size());
    const std::string exclusion_anchor = "\"exclusions\": [";
    doc.insert(doc.find(exclusion_anchor) + exclusion_anchor.size(),
               R"({ "source": { "standard": "EAD", "element_id": "physdesc/extent" }, "reason": "NO_MAPPING_IDENTIFIED", "citation": "extents withheld in this profile" },)");
    const Profile profile = load_profile(doc, ModelVariant::ALTERNATIVE);

    DescriptionTree tree;
    tree.repository.name = "A";
    tree.root.title = "T";
    tree.root.extents.push_back(ExtentStatement::counted(3400, "items"));
    tree.root.extents.push_back(ExtentStatement::textual("12 linear feet"));
    const ConvertResult result = convert(tree, profile, "https://ex.org/noext");
    const SchemaNode &root = result.graph.nodes.at("https://ex.org/noext");
    CHECK_FALSE(root.properties.count("materialExtent"));
    CHECK_FALSE(root.properties.count("collectionSize"));
    CHECK(result.report.excluded.at({Standard::EAD, "physdesc/extent"}).count == 2);
    CHECK(result.report.total_tallies() == test::count_source_occurrences(tree));
}

TEST_CASE("crosswalk properties hold on randomized trees") {
    const Profile alternative = alt_profile();
    const Profile initial = load_default_profile(ModelVariant::INITIAL);
    for (std::uint32_t seed = 1000; seed < 1030; ++seed) {
        test::TreeGenerator gen(seed);
        const DescriptionTree tree = gen.tree();
        const ConvertResult result = convert(tree, alternative, "https://ex.org/prop");
        const Graph &graph = result.graph;

        // part/whole symmetry
        for (const auto &[id, node] : graph.nodes) {
            auto parts = node.properties.find("hasPart");
            if (parts != node.properties.end())
                for (const Value &value : parts->second) {
                    const auto &child = graph.nodes.at(std::get<NodeRef>(value).iri);
                    const auto &is_part = child.properties.at("isPartOf");
                    CHECK(std::count(is_part.begin(), is_part.end(), Value{NodeRef{id}}) == 1);
                }
            auto is_part = node.properties.find("isPartOf");
            if (is_part != node.properties.end())
                for (const Value &value : is_part->second) {
                    const auto &parent = graph.nodes.at(std::get<NodeRef>(value).iri);
                    const auto &has_part = parent.properties.at("hasPart");
                    CHECK(std::count(has_part.begin(), has_part.end(), Value{NodeRef{id}}) == 1);
                }
        }

        // holding symmetry
        const std::string root_id = "https://ex.org/prop";
        const std::string repo_id = "https://ex.org/prop/repository";
        CHECK(graph.nodes.at(root_id).properties.at("holdingArchive") ==
              std::vector<Value>{Value{NodeRef{repo_id}}});
        CHECK(graph.nodes.at(repo_id).properties.at("archiveHeld") == std::vector<Value>{Value{NodeRef{root_id}}});

        // node-count identity
        CHECK(result.report.node_count ==
              result.report.unit_count + test::count_distinct_creators(tree) + 1);
        CHECK(result.report.unit_count == test::count_units(tree.root));

        // conservation against the independent recount
        CHECK(result.report.total_tallies() == test::count_source_occurrences(tree));

        // closed-loop conformance
        for (const auto &[id, node] : graph.nodes)
            CHECK(validate_node(alternative, node).empty());

        // forbidden literals never become property names or types
        for (const auto &[id, node] : graph.nodes) {
            for (const std::string &type : node.types) {
                CHECK(type != "level");
                CHECK(type != "fonds");
            }
            for (const auto &[property, values] : node.properties) {
                CHECK(property != "level");
                CHECK(property.find("REF-") == std::string::npos);
            }
        }

        // variant invariance: identical property multisets, identical
        // non-type triples
        const ConvertResult initial_result = convert(tree, initial, "https://ex.org/prop");
        CHECK(property_multiset(graph) == property_multiset(initial_result.graph));
        std::set<Triple> alt_triples = to_triples(graph, alternative);
        std::set<Triple> ini_triples = to_triples(initial_result.graph, initial);
        std::erase_if(alt_triples, is_type_triple);
        std::erase_if(ini_triples, is_type_triple);
        CHECK(alt_triples == ini_triples);
        for (const auto &[id, node] : initial_result.graph.nodes)
            CHECK(validate_node(initial, node).empty());
    }
}
