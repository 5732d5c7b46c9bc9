/*
 * Copyright (c) 2026 the archemap authors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "archemap/emit.hpp"

#include <algorithm>

#include <json.hpp>

#include "archemap/errors.hpp"

using nlohmann::ordered_json;

namespace archemap {

namespace {

ordered_json value_to_json(const Value &value) {
    if (const auto *text = std::get_if<std::string>(&value))
        return *text;
    if (const auto *integer = std::get_if<std::int64_t>(&value))
        return *integer;
    return ordered_json{{"@id", std::get<NodeRef>(value).iri}};
}

ordered_json context_object(const Graph &graph, const Profile &profile) {
    if (profile.context_namespace_pending == profile.context_namespace_core)
        return profile.context_namespace_core;
    // Pending terms get explicit IRIs; everything else rides @vocab.
    ordered_json context;
    context["@vocab"] = profile.context_namespace_core;
    std::set<std::string> used;
    for (const auto &[id, node] : graph.nodes) {
        for (const std::string &type : node.types)
            if (profile.pending_terms.count(type))
                used.insert(type);
        for (const auto &[property, values] : node.properties)
            if (profile.pending_terms.count(property))
                used.insert(property);
    }
    for (const std::string &term : used)
        context[term] = profile.context_namespace_pending + term;
    return context;
}

} // namespace

std::string serialize_jsonld(const Graph &graph, const Profile &profile) {
    ordered_json doc;
    doc["@context"] = context_object(graph, profile);
    ordered_json nodes = ordered_json::array();
    for (const auto &[id, node] : graph.nodes) { // std::map: sorted by @id
        ordered_json out;
        out["@id"] = node.id;
        out["@type"] = node.types;
        for (const auto &[property, values] : node.properties) { // sorted keys
            if (values.size() == 1) {
                out[property] = value_to_json(values.front());
            } else {
                ordered_json list = ordered_json::array();
                for (const Value &value : values)
                    list.push_back(value_to_json(value));
                out[property] = list;
            }
        }
        nodes.push_back(std::move(out));
    }
    doc["@graph"] = std::move(nodes);
    return doc.dump(2) + "\n";
}

std::set<Triple> to_triples(const Graph &graph, const Profile &profile) {
    std::set<Triple> triples;
    for (const auto &[id, node] : graph.nodes) {
        for (const std::string &type : node.types)
            triples.insert({node.id, std::string(kRdfType), Iri{profile.expand_term(type)}});
        for (const auto &[property, values] : node.properties) {
            const std::string predicate = profile.expand_term(property);
            for (const Value &value : values) {
                if (const auto *text = std::get_if<std::string>(&value))
                    triples.insert({node.id, predicate, TextLiteral{*text}});
                else if (const auto *integer = std::get_if<std::int64_t>(&value))
                    triples.insert({node.id, predicate, IntegerLiteral{*integer}});
                else
                    triples.insert({node.id, predicate, Iri{std::get<NodeRef>(value).iri}});
            }
        }
    }
    return triples;
}

bool graphs_equal(const Graph &a, const Graph &b, const Profile &profile) {
    return to_triples(a, profile) == to_triples(b, profile);
}

namespace {

std::string escape_ntriples(const std::string &text) {
    std::string out;
    out.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
        case '"':
            out += "\\\"";
            break;
        case '\\':
            out += "\\\\";
            break;
        case '\n':
            out += "\\n";
            break;
        case '\r':
            out += "\\r";
            break;
        case '\t':
            out += "\\t";
            break;
        default:
            out += ch;
        }
    }
    return out;
}

} // namespace

std::string serialize_ntriples(const Graph &graph, const Profile &profile) {
    const std::set<Triple> triples = to_triples(graph, profile);
    std::vector<std::string> lines;
    lines.reserve(triples.size());
    for (const Triple &triple : triples) {
        std::string line = "<" + triple.subject + "> <" + triple.predicate + "> ";
        if (const auto *iri = std::get_if<Iri>(&triple.object))
            line += "<" + iri->value + ">";
        else if (const auto *text = std::get_if<TextLiteral>(&triple.object))
            line += "\"" + escape_ntriples(text->value) + "\"";
        else
            line += "\"" + std::to_string(std::get<IntegerLiteral>(triple.object).value) + "\"^^<" +
                    std::string(kXsdInteger) + ">";
        line += " .";
        lines.push_back(std::move(line));
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const std::string &line : lines) {
        out += line;
        out += '\n';
    }
    return out;
}

std::string html_snippet(const Graph &graph, const Profile &profile) {
    std::string body = serialize_jsonld(graph, profile);
    // "</" would let literal content close the script element; "<\/" is
    // the same JSON value.
    std::string escaped;
    escaped.reserve(body.size());
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (body[i] == '<' && i + 1 < body.size() && body[i + 1] == '/') {
            escaped += "<\\/";
            ++i;
        } else {
            escaped += body[i];
        }
    }
    return "<script type=\"application/ld+json\">" + escaped + "</script>\n";
}

namespace {

Value json_to_value(const ordered_json &value) {
    if (value.is_string())
        return value.get<std::string>();
    if (value.is_number_integer())
        return value.get<std::int64_t>();
    if (value.is_object() && value.contains("@id") && value["@id"].is_string() && value.size() == 1)
        return NodeRef{value["@id"].get<std::string>()};
    throw MalformedJsonLd("JSON-LD: unsupported value shape: " + value.dump());
}

} // namespace

Graph parse_jsonld(std::string_view document) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(document);
    } catch (const ordered_json::parse_error &e) {
        throw MalformedJsonLd(std::string("JSON-LD: not parseable JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("@graph") || !doc["@graph"].is_array())
        throw MalformedJsonLd("JSON-LD: document must be an object with an @graph array");

    Graph graph;
    for (const auto &entry : doc["@graph"]) {
        if (!entry.is_object() || !entry.contains("@id") || !entry["@id"].is_string())
            throw MalformedJsonLd("JSON-LD: every node needs a string @id");
        SchemaNode node;
        node.id = entry["@id"].get<std::string>();
        if (entry.contains("@type")) {
            const auto &types = entry["@type"];
            if (types.is_string()) {
                node.types.push_back(types.get<std::string>());
            } else if (types.is_array()) {
                for (const auto &type : types) {
                    if (!type.is_string())
                        throw MalformedJsonLd("JSON-LD: @type entries must be strings");
                    node.types.push_back(type.get<std::string>());
                }
            } else {
                throw MalformedJsonLd("JSON-LD: @type must be a string or array");
            }
        }
        for (const auto &[key, value] : entry.items()) {
            if (key == "@id" || key == "@type")
                continue;
            if (value.is_array())
                for (const auto &item : value)
                    node.add(key, json_to_value(item));
            else
                node.add(key, json_to_value(value));
        }
        if (graph.nodes.count(node.id))
            throw MalformedJsonLd("JSON-LD: duplicate node @id " + node.id);
        graph.nodes.emplace(node.id, std::move(node));
    }
    return graph;
}

} // namespace archemap
