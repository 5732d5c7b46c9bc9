/*
 * Copyright (c) 2026 the archemap authors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "archemap/aspace.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "archemap/ead.hpp"
#include "archemap/errors.hpp"

using nlohmann::ordered_json;

namespace archemap {

namespace {

ordered_json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw MalformedBundle("bundle: cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return ordered_json::parse(buffer.str());
    } catch (const ordered_json::parse_error &e) {
        throw MalformedBundle("bundle: " + path.string() + " is not parseable JSON: " + e.what());
    }
}

std::string get_string(const ordered_json &doc, const char *key) {
    if (doc.is_object() && doc.contains(key) && doc[key].is_string())
        return doc[key].get<std::string>();
    return {};
}

std::string doc_id(const ordered_json &doc, const std::string &fallback) {
    const std::string id = get_string(doc, "id");
    return id.empty() ? fallback : id;
}

// Record fields shared by resource.json and components/*.json.
void parse_record_fields(const ordered_json &doc, ArchivalUnit &unit, const AspaceBundle &bundle,
                         const std::string &where) {
    const std::string title = normalize_whitespace(get_string(doc, "title"));
    if (!title.empty())
        unit.title = title;
    const std::string level = normalize_whitespace(get_string(doc, "level"));
    if (!level.empty())
        unit.level = level;

    if (doc.contains("dates")) {
        if (!doc["dates"].is_array())
            throw MalformedBundle("bundle: " + where + ": 'dates' must be an array");
        std::optional<std::string> joined;
        for (const auto &date : doc["dates"]) {
            std::string text;
            if (date.is_string()) {
                text = date.get<std::string>();
            } else if (date.is_object()) {
                text = get_string(date, "expression");
                if (text.empty()) {
                    text = get_string(date, "begin");
                    const std::string end = get_string(date, "end");
                    if (!end.empty())
                        text += "/" + end;
                }
            }
            text = normalize_whitespace(text);
            if (!text.empty()) {
                if (joined)
                    *joined += ", " + text;
                else
                    joined = text;
            }
        }
        unit.dates = joined;
    }

    std::optional<std::string> code;
    for (const char *key : {"id_0", "id_1", "id_2", "id_3"}) {
        const std::string part = normalize_whitespace(get_string(doc, key));
        if (!part.empty()) {
            if (code)
                *code += "-" + part;
            else
                code = part;
        }
    }
    unit.reference_code = code;

    if (doc.contains("extents")) {
        if (!doc["extents"].is_array())
            throw MalformedBundle("bundle: " + where + ": 'extents' must be an array");
        for (const auto &extent : doc["extents"]) {
            const std::string number = normalize_whitespace(get_string(extent, "number"));
            const std::string type = normalize_whitespace(get_string(extent, "extent_type"));
            if (number.empty() && type.empty())
                continue;
            unit.extents.push_back(classify_extent(number, type));
        }
    }

    if (doc.contains("notes")) {
        if (!doc["notes"].is_array())
            throw MalformedBundle("bundle: " + where + ": 'notes' must be an array");
        for (const auto &note_doc : doc["notes"]) {
            const std::string type = get_string(note_doc, "type");
            if (type.empty())
                throw MalformedBundle("bundle: " + where + ": note without 'type'");
            const std::string text = normalize_whitespace(get_string(note_doc, "text"));
            if (!is_recognized_note(type)) {
                unit.extra_elements.push_back({Standard::ASPACE, type});
                continue;
            }
            if (text.empty())
                continue; // empty notes are dropped at ingest
            NoteField note;
            note.ref = {Standard::ASPACE, type};
            note.text = text;
            const std::string label = normalize_whitespace(get_string(note_doc, "label"));
            if (!label.empty())
                note.label = label;
            unit.notes.push_back(std::move(note));
        }
    }

    if (doc.contains("languages")) {
        if (!doc["languages"].is_array())
            throw MalformedBundle("bundle: " + where + ": 'languages' must be an array");
        for (const auto &language : doc["languages"]) {
            if (!language.is_string())
                throw MalformedBundle("bundle: " + where + ": 'languages' must hold strings");
            const std::string text = normalize_whitespace(language.get<std::string>());
            if (!text.empty())
                unit.languages.push_back(text);
        }
    }

    if (doc.contains("linked_agents")) {
        if (!doc["linked_agents"].is_array())
            throw MalformedBundle("bundle: " + where + ": 'linked_agents' must be an array");
        for (const auto &link : doc["linked_agents"]) {
            const std::string role = get_string(link, "role");
            const std::string ref = get_string(link, "ref");
            if (ref.empty())
                throw MalformedBundle("bundle: " + where + ": linked agent without 'ref'");
            AgentRole parsed_role;
            if (role == "creator") {
                parsed_role = AgentRole::CREATOR;
            } else if (role == "subject") {
                parsed_role = AgentRole::SUBJECT;
            } else {
                // Roles outside the profile are dropped with an unknown tally.
                unit.extra_elements.push_back({Standard::ASPACE, "linked_agents." + (role.empty() ? "none" : role)});
                continue;
            }
            auto agent_doc = bundle.agent_docs.find(ref);
            if (agent_doc == bundle.agent_docs.end())
                throw MalformedBundle("bundle: " + where + ": linked agent '" + ref + "' not in bundle");
            AgentRecord agent;
            agent.name = normalize_whitespace(get_string(agent_doc->second, "name"));
            if (agent.name.empty())
                throw MalformedBundle("bundle: agent '" + ref + "' has no name");
            const std::string kind = get_string(agent_doc->second, "agent_kind");
            if (kind == "person")
                agent.agent_kind = AgentKind::PERSON;
            else if (kind == "corporate_entity")
                agent.agent_kind = AgentKind::CORPORATE_BODY;
            else if (kind == "family")
                agent.agent_kind = AgentKind::FAMILY;
            else
                throw MalformedBundle("bundle: agent '" + ref + "' has unknown agent_kind '" + kind + "'");
            const std::string dates = normalize_whitespace(get_string(agent_doc->second, "dates_of_existence"));
            if (!dates.empty())
                agent.dates_of_existence = dates;
            agent.role = parsed_role;
            unit.agents.push_back(std::move(agent));
        }
    }
}

bool is_published(const ordered_json &doc) {
    if (doc.is_object() && doc.contains("publish") && doc["publish"].is_boolean())
        return doc["publish"].get<bool>();
    return true;
}

void parse_tree_children(const ordered_json &tree_node, ArchivalUnit &unit, const AspaceBundle &bundle) {
    if (!tree_node.contains("children"))
        return;
    if (!tree_node["children"].is_array())
        throw MalformedBundle("bundle: tree 'children' must be an array");
    for (const auto &child_node : tree_node["children"]) {
        const std::string ref = get_string(child_node, "ref");
        if (ref.empty())
            throw MalformedBundle("bundle: tree child without 'ref'");
        auto component = bundle.component_docs.find(ref);
        if (component == bundle.component_docs.end())
            throw InconsistentTree("bundle: tree references component '" + ref + "' absent from the bundle");
        if (!is_published(component->second)) {
            // Unpublished subtrees are pruned; the web-discovery profile
            // only converts published records.
            unit.extra_elements.push_back({Standard::ASPACE, "unpublished"});
            continue;
        }
        ArchivalUnit child;
        parse_record_fields(component->second, child, bundle, "components/" + ref);
        parse_tree_children(child_node, child, bundle);
        unit.children.push_back(std::move(child));
    }
}

} // namespace

AspaceBundle load_bundle(const std::filesystem::path &directory) {
    std::error_code ec;
    if (!std::filesystem::is_directory(directory, ec))
        throw MalformedBundle("bundle: " + directory.string() + " is not a directory");
    AspaceBundle bundle;
    bundle.resource_doc = read_json_file(directory / "resource.json");
    bundle.tree_doc = read_json_file(directory / "tree.json");
    bundle.repository_doc = read_json_file(directory / "repository.json");
    for (const char *subdir : {"components", "agents"}) {
        const std::filesystem::path dir = directory / subdir;
        if (!std::filesystem::is_directory(dir, ec))
            continue;
        std::vector<std::filesystem::path> files;
        for (const auto &entry : std::filesystem::directory_iterator(dir))
            if (entry.is_regular_file() && entry.path().extension() == ".json")
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto &path : files) {
            ordered_json doc = read_json_file(path);
            const std::string id = doc_id(doc, path.stem().string());
            if (std::string(subdir) == "components")
                bundle.component_docs.emplace(id, std::move(doc));
            else
                bundle.agent_docs.emplace(id, std::move(doc));
        }
    }
    return bundle;
}

DescriptionTree parse_aspace(const AspaceBundle &bundle) {
    if (!bundle.resource_doc.is_object())
        throw MalformedBundle("bundle: resource document must be an object");
    if (normalize_whitespace(get_string(bundle.resource_doc, "title")).empty())
        throw MalformedBundle("bundle: resource has no title");
    if (!bundle.tree_doc.is_object())
        throw MalformedBundle("bundle: tree document must be an object");
    if (!bundle.repository_doc.is_object())
        throw MalformedBundle("bundle: repository document must be an object");

    const std::string resource_id = doc_id(bundle.resource_doc, "resource");
    const std::string tree_ref = get_string(bundle.tree_doc, "ref");
    if (tree_ref != resource_id)
        throw InconsistentTree("bundle: tree root references '" + tree_ref + "', not the resource '" + resource_id +
                               "'");

    DescriptionTree tree;
    tree.source_format = SourceFormat::ASPACE;
    parse_record_fields(bundle.resource_doc, tree.root, bundle, "resource");
    parse_tree_children(bundle.tree_doc, tree.root, bundle);

    tree.repository.name = normalize_whitespace(get_string(bundle.repository_doc, "name"));
    if (tree.repository.name.empty())
        throw MalformedBundle("bundle: repository has no name");
    const std::string url = normalize_whitespace(get_string(bundle.repository_doc, "url"));
    if (!url.empty())
        tree.repository.url = url;
    const std::string address = normalize_whitespace(get_string(bundle.repository_doc, "address"));
    if (!address.empty())
        tree.repository.address = address;
    return tree;
}

} // namespace archemap
