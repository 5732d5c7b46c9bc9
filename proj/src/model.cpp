/*
 * Copyright (c) 2026 the archemap authors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "archemap/model.hpp"

#include <cctype>
#include <charconv>

namespace archemap {

std::string to_string(Standard standard) {
    switch (standard) {
    case Standard::ISADG:
        return "ISADG";
    case Standard::DACS:
        return "DACS";
    case Standard::EAD:
        return "EAD";
    case Standard::ASPACE:
        return "ASPACE";
    }
    return "?";
}

std::optional<Standard> standard_from_string(const std::string &name) {
    if (name == "ISADG")
        return Standard::ISADG;
    if (name == "DACS")
        return Standard::DACS;
    if (name == "EAD")
        return Standard::EAD;
    if (name == "ASPACE")
        return Standard::ASPACE;
    return std::nullopt;
}

std::string to_string(const SourceElementRef &ref) {
    return "(" + to_string(ref.standard) + ", " + ref.element_id + ")";
}

std::string to_string(AgentKind kind) {
    switch (kind) {
    case AgentKind::PERSON:
        return "PERSON";
    case AgentKind::CORPORATE_BODY:
        return "CORPORATE_BODY";
    case AgentKind::FAMILY:
        return "FAMILY";
    }
    return "?";
}

std::string to_string(AgentRole role) {
    return role == AgentRole::CREATOR ? "CREATOR" : "SUBJECT";
}

ExtentStatement ExtentStatement::textual(std::string text) {
    ExtentStatement extent;
    extent.kind = ExtentKind::TEXTUAL;
    extent.text = std::move(text);
    return extent;
}

ExtentStatement ExtentStatement::counted(std::uint64_t count, std::string unit_label) {
    ExtentStatement extent;
    extent.kind = ExtentKind::COUNT;
    extent.count = count;
    if (!unit_label.empty())
        extent.unit_label = std::move(unit_label);
    return extent;
}

ExtentStatement classify_extent(const std::string &number, const std::string &extent_type) {
    if (extent_type == "items" || extent_type == "item") {
        std::uint64_t value = 0;
        const char *first = number.data();
        const char *last = number.data() + number.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec == std::errc() && ptr == last && !number.empty())
            return ExtentStatement::counted(value, "items");
    }
    std::string text = number;
    if (!extent_type.empty()) {
        if (!text.empty())
            text += ' ';
        text += extent_type;
    }
    return ExtentStatement::textual(normalize_whitespace(text));
}

std::string normalize_whitespace(const std::string &text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (unsigned char ch : text) {
        if (std::isspace(ch)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out += ' ';
            pending_space = false;
        }
        out += static_cast<char>(ch);
    }
    return out;
}

std::string path_to_string(const std::vector<std::size_t> &path) {
    std::string out = "root";
    for (std::size_t index : path)
        out += "/c" + std::to_string(index);
    return out;
}

namespace {

void flatten_into(const ArchivalUnit &unit, std::vector<std::size_t> &path, std::vector<FlatUnit> &out) {
    out.push_back({path, &unit});
    for (std::size_t i = 0; i < unit.children.size(); ++i) {
        path.push_back(i);
        flatten_into(unit.children[i], path, out);
        path.pop_back();
    }
}

void check_ref(const SourceElementRef &ref, const std::string &where, std::vector<std::string> &out) {
    if (ref.element_id.empty())
        out.push_back(where + ": source element ref has empty element_id");
}

void check_unit(const ArchivalUnit &unit, std::vector<std::size_t> &path, std::vector<std::string> &out) {
    const std::string where = path_to_string(path);
    for (std::size_t i = 0; i < unit.notes.size(); ++i) {
        const NoteField &note = unit.notes[i];
        const std::string note_where = where + ": note " + std::to_string(i) + " " + to_string(note.ref);
        if (normalize_whitespace(note.text).empty())
            out.push_back(note_where + ": text empty after whitespace normalization");
        check_ref(note.ref, note_where, out);
    }
    for (std::size_t i = 0; i < unit.extents.size(); ++i) {
        const ExtentStatement &extent = unit.extents[i];
        const std::string extent_where = where + ": extent " + std::to_string(i);
        const bool has_text = extent.text.has_value();
        const bool has_count = extent.count.has_value();
        if (has_text && has_count)
            out.push_back(extent_where + ": both text and count populated");
        else if (extent.kind == ExtentKind::TEXTUAL && !has_text)
            out.push_back(extent_where + ": TEXTUAL extent without text");
        else if (extent.kind == ExtentKind::COUNT && !has_count)
            out.push_back(extent_where + ": COUNT extent without count");
    }
    for (std::size_t i = 0; i < unit.agents.size(); ++i) {
        if (unit.agents[i].name.empty())
            out.push_back(where + ": agent " + std::to_string(i) + " has empty name");
    }
    for (std::size_t i = 0; i < unit.extra_elements.size(); ++i)
        check_ref(unit.extra_elements[i], where + ": extra element " + std::to_string(i), out);
    for (std::size_t i = 0; i < unit.children.size(); ++i) {
        path.push_back(i);
        check_unit(unit.children[i], path, out);
        path.pop_back();
    }
}

} // namespace

std::vector<FlatUnit> flatten(const DescriptionTree &tree) {
    std::vector<FlatUnit> out;
    std::vector<std::size_t> path;
    flatten_into(tree.root, path, out);
    return out;
}

std::vector<std::string> validate_tree(const DescriptionTree &tree) {
    std::vector<std::string> out;
    if (tree.repository.name.empty())
        out.push_back("repository: name empty");
    std::vector<std::size_t> path;
    check_unit(tree.root, path, out);
    return out;
}

} // namespace archemap
