/*
 * Copyright (c) 2026 the archemap authors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef ARCHEMAP_EMIT_HPP
#define ARCHEMAP_EMIT_HPP

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <variant>

#include "archemap/crosswalk.hpp"

namespace archemap {

struct Iri {
    std::string value;
    friend auto operator<=>(const Iri &, const Iri &) = default;
};

struct TextLiteral {
    std::string value;
    friend auto operator<=>(const TextLiteral &, const TextLiteral &) = default;
};

struct IntegerLiteral {
    std::int64_t value = 0;
    friend auto operator<=>(const IntegerLiteral &, const IntegerLiteral &) = default;
};

using TripleObject = std::variant<Iri, TextLiteral, IntegerLiteral>;

/// One RDF triple with fully expanded IRIs. No blank nodes exist anywhere:
/// every node carries an assigned IRI.
struct Triple {
    std::string subject;
    std::string predicate;
    TripleObject object;

    friend auto operator<=>(const Triple &, const Triple &) = default;
};

inline constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kXsdInteger = "http://www.w3.org/2001/XMLSchema#integer";

/// Deterministic JSON-LD: @graph sorted by @id, node keys ordered
/// @id, @type, then properties lexicographically; two-space indent,
/// trailing newline; byte-identical across runs for equal inputs.
std::string serialize_jsonld(const Graph &graph, const Profile &profile);

/// The triple-set view of a graph: one type triple per (node, type) plus
/// one triple per (node, property, value), terms expanded per the
/// profile's namespace policy. This is the testing oracle.
std::set<Triple> to_triples(const Graph &graph, const Profile &profile);

/// True iff both graphs produce the same triple set.
bool graphs_equal(const Graph &a, const Graph &b, const Profile &profile);

/// Sorted N-Triples, one line per triple, trailing newline.
std::string serialize_ntriples(const Graph &graph, const Profile &profile);

/// The JSON-LD document wrapped in <script type="application/ld+json">.
/// "</" inside the document is escaped so the element cannot be closed
/// early by literal content.
std::string html_snippet(const Graph &graph, const Profile &profile);

/// Reads a document in this artifact's emitted JSON-LD shape back into a
/// Graph. Throws MalformedJsonLd on anything else.
Graph parse_jsonld(std::string_view document);

} // namespace archemap

#endif
