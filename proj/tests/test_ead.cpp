/*
 * Copyright (c) 2026 the archemap authors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <regex>

#include "archemap/ead.hpp"
#include "archemap/errors.hpp"
#include "support/fixtures.hpp"

using namespace archemap;

namespace {

// Independent component counter over the raw XML text: matches opening
// tags for archdesc, c, and c01..c12, ignoring namespace prefixes.
std::size_t count_unit_elements(const std::string &xml) {
    static const std::regex tag(R"(<([A-Za-z0-9._-]+:)?(archdesc|c|c0[1-9]|c1[0-2])[\s>/])");
    return static_cast<std::size_t>(
        std::distance(std::sregex_iterator(xml.begin(), xml.end(), tag), std::sregex_iterator()));
}

std::size_t tree_size(const ArchivalUnit &unit) {
    std::size_t n = 1;
    for (const auto &child : unit.children)
        n += tree_size(child);
    return n;
}

} // namespace

TEST_CASE("minimal EAD parses field by field") {
    const char *xml = R"(<?xml version="1.0"?>
<ead><archdesc><did>
  <unittitle>Smith Papers</unittitle>
  <repository>Somewhere</repository>
</did></archdesc></ead>)";
    const DescriptionTree tree = parse_ead(xml);

    DescriptionTree expected;
    expected.source_format = SourceFormat::EAD;
    expected.repository.name = "Somewhere";
    expected.root.title = "Smith Papers";
    CHECK(tree == expected);
    CHECK(tree.root.children.empty());
}

TEST_CASE("nested numbered containers become nested children") {
    const char *xml = R"(<ead><archdesc><did><unittitle>R</unittitle><repository>A</repository></did>
<dsc>
  <c01><did><unittitle>S1</unittitle></did>
    <c02><did><unittitle>S1.1</unittitle></did></c02>
  </c01>
  <c01><did><unittitle>S2</unittitle></did>
    <c02><did><unittitle>S2.1</unittitle></did></c02>
  </c01>
</dsc></archdesc></ead>)";
    const DescriptionTree tree = parse_ead(xml);
    REQUIRE(tree.root.children.size() == 2);
    CHECK(tree.root.children[0].children.size() == 1);
    CHECK(tree.root.children[1].children.size() == 1);
    CHECK(*tree.root.children[0].title == "S1");
    CHECK(*tree.root.children[1].children[0].title == "S2.1");
    CHECK(tree_size(tree.root) == count_unit_elements(xml));
}

TEST_CASE("unnumbered c containers work like numbered ones") {
    const char *xml = R"(<ead><archdesc><did><repository>A</repository></did>
<dsc><c><did><unittitle>Series</unittitle></did><c><did><unittitle>File</unittitle></did></c></c></dsc>
</archdesc></ead>)";
    const DescriptionTree tree = parse_ead(xml);
    REQUIRE(tree.root.children.size() == 1);
    REQUIRE(tree.root.children[0].children.size() == 1);
    CHECK(*tree.root.children[0].children[0].title == "File");
}

TEST_CASE("a document without archdesc is MissingArchdesc") {
    CHECK_THROWS_AS(parse_ead("<ead><eadheader><eadid>x</eadid></eadheader></ead>"), MissingArchdesc);
}

TEST_CASE("unparseable XML is MalformedXml") {
    CHECK_THROWS_AS(parse_ead("<ead><archdesc>"), MalformedXml);
    CHECK_THROWS_AS(parse_ead("not xml at all"), MalformedXml);
}

TEST_CASE("classify_note passes names through with the EAD standard") {
    CHECK(classify_note("appraisal") == SourceElementRef{Standard::EAD, "appraisal"});
    CHECK(classify_note("scopecontent") == SourceElementRef{Standard::EAD, "scopecontent"});
    CHECK(classify_note("frobnicate") == SourceElementRef{Standard::EAD, "frobnicate"});
    CHECK(is_recognized_note("appraisal"));
    CHECK(is_recognized_note("scopecontent"));
    CHECK_FALSE(is_recognized_note("frobnicate"));
}

TEST_CASE("fixtures parse with unit counts matching the element counter") {
    for (const char *name : {"collection_only.xml", "collection_two_series.xml", "three_deep.xml", "agent_rich.xml",
                             "gap_rich.xml", "pair.xml"}) {
        const std::string xml = test::read_fixture(name);
        const DescriptionTree tree = parse_ead(xml);
        CHECK_MESSAGE(tree_size(tree.root) == count_unit_elements(xml), name);
        CHECK_MESSAGE(validate_tree(tree).empty(), name);
    }
}

TEST_CASE("parsing is pure: same bytes, structurally identical tree") {
    const std::string xml = test::read_fixture("pair.xml");
    CHECK(parse_ead(xml) == parse_ead(xml));
}

TEST_CASE("namespaced EAD matches by local name") {
    const char *xml = R"(<?xml version="1.0"?>
<ead:ead xmlns:ead="urn:isbn:1-931666-22-9">
  <ead:archdesc ead:level="collection">
    <ead:did>
      <ead:unittitle>Namespaced Papers</ead:unittitle>
      <ead:repository>NS Archive</ead:repository>
    </ead:did>
  </ead:archdesc>
</ead:ead>)";
    const DescriptionTree tree = parse_ead(xml);
    CHECK(*tree.root.title == "Namespaced Papers");
    CHECK(*tree.root.level == "collection");
    CHECK(tree.repository.name == "NS Archive");
}

TEST_CASE("unitdate normal attribute wins over element text") {
    const std::string xml = test::read_fixture("collection_only.xml");
    const DescriptionTree tree = parse_ead(xml);
    CHECK(*tree.root.dates == "1900/1950");
}

TEST_CASE("level and unitid are retained internally") {
    const DescriptionTree tree = parse_ead(test::read_fixture("gap_rich.xml"));
    CHECK(*tree.root.level == "fonds");
    CHECK(*tree.root.reference_code == "MS-042-GAPCODE");
}

TEST_CASE("eadheader text is routed to the gap tally, not to unit fields") {
    const std::string xml = test::read_fixture("collection_only.xml");
    const DescriptionTree tree = parse_ead(xml);
    CHECK(*tree.root.title == "Smith Family Papers"); // not the titleproper
    for (const NoteField &note : tree.root.notes)
        CHECK(note.text.find("Guide to") == std::string::npos);
    REQUIRE(tree.root.extra_elements.size() == 1);
    CHECK(tree.root.extra_elements[0] == SourceElementRef{Standard::EAD, "eadheader"});
}

TEST_CASE("repository falls back to the eadheader publisher") {
    const char *xml = R"(<ead>
  <eadheader><filedesc>
    <titlestmt><titleproper>Guide</titleproper></titlestmt>
    <publicationstmt><publisher>Fallback Publisher</publisher></publicationstmt>
  </filedesc></eadheader>
  <archdesc><did><unittitle>T</unittitle></did></archdesc>
</ead>)";
    const DescriptionTree tree = parse_ead(xml);
    CHECK(tree.repository.name == "Fallback Publisher");
}

TEST_CASE("a repository-less EAD parses but fails tree validation") {
    const DescriptionTree tree = parse_ead("<ead><archdesc><did><unittitle>T</unittitle></did></archdesc></ead>");
    const auto violations = validate_tree(tree);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].find("repository") != std::string::npos);
}

TEST_CASE("mixed content flattens to plain text in document order") {
    const char *xml = R"(<ead><archdesc><did><repository>A</repository></did>
<scopecontent><p>Collection of <emph>papers</emph> and letters</p></scopecontent>
</archdesc></ead>)";
    const DescriptionTree tree = parse_ead(xml);
    REQUIRE(tree.root.notes.size() == 1);
    CHECK(tree.root.notes[0].text == "Collection of papers and letters");
}

TEST_CASE("note heads become labels and stay out of the text") {
    const DescriptionTree tree = parse_ead(test::read_fixture("collection_only.xml"));
    REQUIRE(tree.root.notes.size() == 1);
    CHECK(tree.root.notes[0].text == "Family correspondence and business records.");
    CHECK(*tree.root.notes[0].label == "Scope and Contents");
    CHECK(tree.root.notes[0].ref == SourceElementRef{Standard::EAD, "scopecontent"});
}

TEST_CASE("recognized note elements with no text are dropped") {
    const char *xml = R"(<ead><archdesc><did><repository>A</repository></did>
<appraisal></appraisal></archdesc></ead>)";
    const DescriptionTree tree = parse_ead(xml);
    CHECK(tree.root.notes.empty());
    CHECK(tree.root.extra_elements.empty());
}

TEST_CASE("unrecognized elements are recorded as refs for the unknown tally") {
    const DescriptionTree tree = parse_ead(test::read_fixture("unknown_element.xml"));
    REQUIRE(tree.root.extra_elements.size() == 1);
    CHECK(tree.root.extra_elements[0] == SourceElementRef{Standard::EAD, "odd"});
}

TEST_CASE("origination name elements map to agent kinds") {
    const DescriptionTree tree = parse_ead(test::read_fixture("agent_rich.xml"));
    REQUIRE(tree.root.agents.size() == 3);
    CHECK(tree.root.agents[0] == AgentRecord{"Ada Smith", AgentKind::PERSON, std::nullopt, AgentRole::CREATOR});
    CHECK(tree.root.agents[1].agent_kind == AgentKind::CORPORATE_BODY);
    CHECK(tree.root.agents[1].name == "Acme Shipping Company");
    CHECK(tree.root.agents[2].agent_kind == AgentKind::FAMILY);
}

TEST_CASE("extents classify through the shared count/textual split") {
    const DescriptionTree tree = parse_ead(test::read_fixture("pair.xml"));
    REQUIRE(tree.root.extents.size() == 2);
    CHECK(tree.root.extents[0].kind == ExtentKind::COUNT);
    CHECK(*tree.root.extents[0].count == 3400);
    CHECK(tree.root.extents[1].kind == ExtentKind::TEXTUAL);
    CHECK(*tree.root.extents[1].text == "12 linear feet");
}

TEST_CASE("langmaterial yields one language per language element") {
    const DescriptionTree tree = parse_ead(test::read_fixture("pair.xml"));
    CHECK(tree.root.languages == std::vector<std::string>{"English", "French"});
}

TEST_CASE("CDATA sections read as ordinary text") {
    const char *xml = R"(<ead><archdesc><did><repository>A</repository></did>
<scopecontent><p><![CDATA[Letters & <drafts>, unsorted.]]></p></scopecontent>
</archdesc></ead>)";
    const DescriptionTree tree = parse_ead(xml);
    REQUIRE(tree.root.notes.size() == 1);
    CHECK(tree.root.notes[0].text == "Letters & <drafts>, unsorted.");
}

TEST_CASE("ISO-8859-1 encoded documents are decoded to UTF-8") {
    std::string xml = "<?xml version=\"1.0\" encoding=\"ISO-8859-1\"?>"
                      "<ead><archdesc><did><unittitle>Caf\xe9 Records</unittitle>"
                      "<repository>A</repository></did></archdesc></ead>";
    const DescriptionTree tree = parse_ead(xml);
    CHECK(*tree.root.title == "Caf\xc3\xa9 Records");
}
