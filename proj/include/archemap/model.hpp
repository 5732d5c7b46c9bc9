/*
 * Copyright (c) 2026 the archemap authors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef ARCHEMAP_MODEL_HPP
#define ARCHEMAP_MODEL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace archemap {

/// Descriptive standard a source element belongs to.
enum class Standard { ISADG, DACS, EAD, ASPACE };

std::string to_string(Standard standard);
std::optional<Standard> standard_from_string(const std::string &name);

/// Identifies one element of a descriptive standard: an ISAD(G) section
/// number ("3.1.2"), an EAD element name ("unittitle"), an ArchivesSpace
/// field ("title"). Equality is case-sensitive exact match.
struct SourceElementRef {
    Standard standard = Standard::EAD;
    std::string element_id;

    friend bool operator==(const SourceElementRef &, const SourceElementRef &) = default;
    friend auto operator<=>(const SourceElementRef &, const SourceElementRef &) = default;
};

std::string to_string(const SourceElementRef &ref);

/// A textual note attached to a unit of description. `text` is non-empty
/// after whitespace normalization; empty notes are dropped at ingest.
struct NoteField {
    SourceElementRef ref;
    std::string text;
    std::optional<std::string> label;

    friend bool operator==(const NoteField &, const NoteField &) = default;
};

enum class ExtentKind { TEXTUAL, COUNT };

/// One extent statement: either free text ("12 linear feet") or a counted
/// quantity (3400 "items"). Exactly one of text/count is populated.
struct ExtentStatement {
    ExtentKind kind = ExtentKind::TEXTUAL;
    std::optional<std::string> text;
    std::optional<std::uint64_t> count;
    std::optional<std::string> unit_label;

    static ExtentStatement textual(std::string text);
    static ExtentStatement counted(std::uint64_t count, std::string unit_label);

    friend bool operator==(const ExtentStatement &, const ExtentStatement &) = default;
};

/// Shared COUNT/TEXTUAL split: "items"/"item" with a non-negative integer
/// number becomes COUNT, everything else a TEXTUAL "{number} {type}".
/// Both ingesters use this so equivalent sources classify identically.
ExtentStatement classify_extent(const std::string &number, const std::string &extent_type);

enum class AgentKind { PERSON, CORPORATE_BODY, FAMILY };
enum class AgentRole { CREATOR, SUBJECT };

std::string to_string(AgentKind kind);
std::string to_string(AgentRole role);

struct AgentRecord {
    std::string name;
    AgentKind agent_kind = AgentKind::PERSON;
    std::optional<std::string> dates_of_existence;
    AgentRole role = AgentRole::CREATOR;

    friend bool operator==(const AgentRecord &, const AgentRecord &) = default;
};

struct RepositoryRecord {
    std::string name;
    std::optional<std::string> address;
    std::optional<std::string> url;

    friend bool operator==(const RepositoryRecord &, const RepositoryRecord &) = default;
};

/// One unit of archival description. `level` and `reference_code` are
/// retained for gap accounting but are never emitted as linked data.
/// `extra_elements` records source elements encountered with no usable
/// content representation (unrecognized elements, description-control
/// areas, pruned subtrees); they exist only to be tallied.
struct ArchivalUnit {
    std::optional<std::string> title;
    std::optional<std::string> level;
    std::optional<std::string> dates;
    std::optional<std::string> reference_code;
    std::vector<ExtentStatement> extents;
    std::vector<AgentRecord> agents;
    std::vector<NoteField> notes;
    std::vector<std::string> languages;
    std::vector<SourceElementRef> extra_elements;
    std::vector<ArchivalUnit> children;

    friend bool operator==(const ArchivalUnit &, const ArchivalUnit &) = default;
};

enum class SourceFormat { EAD, ASPACE };

/// Source-standard-agnostic finding aid: what every ingester produces and
/// the crosswalk consumes.
struct DescriptionTree {
    RepositoryRecord repository;
    ArchivalUnit root;
    SourceFormat source_format = SourceFormat::EAD;

    friend bool operator==(const DescriptionTree &, const DescriptionTree &) = default;
};

/// One entry of a preorder traversal: the child-index path from the root
/// (empty for the root itself) and the unit it addresses.
struct FlatUnit {
    std::vector<std::size_t> path;
    const ArchivalUnit *unit = nullptr;
};

/// Preorder traversal of the tree; the first entry is the root with an
/// empty path, and siblings appear in document order.
std::vector<FlatUnit> flatten(const DescriptionTree &tree);

/// Checks every model invariant; returns one human-readable violation per
/// problem, each naming the offending unit path ("root/c0/c1"). Empty
/// result means the tree is valid.
std::vector<std::string> validate_tree(const DescriptionTree &tree);

/// Collapses runs of ASCII whitespace to single spaces and trims the ends.
std::string normalize_whitespace(const std::string &text);

/// Renders a child-index path as "root" / "root/c0/c1".
std::string path_to_string(const std::vector<std::size_t> &path);

} // namespace archemap

#endif
