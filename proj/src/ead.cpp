/*
 * Copyright (c) 2026 the archemap authors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "archemap/ead.hpp"

#include <expat.h>

#include <array>
#include <cctype>
#include <cstring>
#include <limits>
#include <map>

#include "archemap/errors.hpp"

namespace archemap {

namespace {

// Owned DOM built from the expat callbacks. Text and element children are
// interleaved so mixed content flattens in document order.
struct XmlNode {
    enum class Kind { Text, Element };
    Kind kind = Kind::Element;
    std::string text;                                       // Text
    std::string name;                                       // Element (local name)
    std::map<std::string, std::string> attributes;          // Element (local attr names)
    std::vector<XmlNode> children;                          // Element
};

std::string local_name(const char *qname) {
    const char *colon = std::strrchr(qname, ':');
    return colon ? std::string(colon + 1) : std::string(qname);
}

struct ParserState {
    XmlNode root;
    std::vector<XmlNode *> stack;
};

void on_start(void *user, const XML_Char *name, const XML_Char **attrs) {
    auto *state = static_cast<ParserState *>(user);
    XmlNode element;
    element.kind = XmlNode::Kind::Element;
    element.name = local_name(name);
    for (int i = 0; attrs[i]; i += 2)
        element.attributes.emplace(local_name(attrs[i]), attrs[i + 1]);
    XmlNode *parent = state->stack.back();
    parent->children.push_back(std::move(element));
    state->stack.push_back(&parent->children.back());
}

void on_end(void *user, const XML_Char *) {
    auto *state = static_cast<ParserState *>(user);
    state->stack.pop_back();
}

void on_text(void *user, const XML_Char *data, int len) {
    auto *state = static_cast<ParserState *>(user);
    XmlNode *parent = state->stack.back();
    if (!parent->children.empty() && parent->children.back().kind == XmlNode::Kind::Text) {
        parent->children.back().text.append(data, static_cast<std::size_t>(len));
        return;
    }
    XmlNode text;
    text.kind = XmlNode::Kind::Text;
    text.text.assign(data, static_cast<std::size_t>(len));
    parent->children.push_back(std::move(text));
}

XmlNode parse_document(std::string_view document) {
    struct ParserHandle {
        XML_Parser parser;
        explicit ParserHandle(XML_Parser p) : parser(p) {}
        ~ParserHandle() { XML_ParserFree(parser); }
    };
    ParserHandle handle(XML_ParserCreate(nullptr));
    if (!handle.parser)
        throw MalformedXml("could not create XML parser");

    ParserState state;
    state.stack.push_back(&state.root);
    XML_SetUserData(handle.parser, &state);
    XML_SetElementHandler(handle.parser, on_start, on_end);
    XML_SetCharacterDataHandler(handle.parser, on_text);

    if (document.size() > static_cast<std::size_t>(std::numeric_limits<int>::max()))
        throw MalformedXml("document too large");
    if (XML_Parse(handle.parser, document.data(), static_cast<int>(document.size()), 1) != XML_STATUS_OK) {
        const XML_Error code = XML_GetErrorCode(handle.parser);
        throw MalformedXml(std::string("XML parse error at line ") +
                           std::to_string(XML_GetCurrentLineNumber(handle.parser)) + ": " +
                           XML_ErrorString(code));
    }
    if (state.root.children.empty())
        throw MalformedXml("document has no root element");
    return std::move(state.root);
}

const XmlNode *find_element(const XmlNode &node, const std::string &name) {
    for (const XmlNode &child : node.children) {
        if (child.kind != XmlNode::Kind::Element)
            continue;
        if (child.name == name)
            return &child;
        if (const XmlNode *found = find_element(child, name))
            return found;
    }
    return nullptr;
}

// Document-order text with tags stripped; <head> display labels are
// skipped so note text stays prose.
void collect_text(const XmlNode &element, std::string &out) {
    for (const XmlNode &child : element.children) {
        if (child.kind == XmlNode::Kind::Text) {
            out += child.text;
        } else if (child.name != "head") {
            out += ' ';
            collect_text(child, out);
            out += ' ';
        }
    }
}

std::string flattened_text(const XmlNode &element) {
    std::string out;
    collect_text(element, out);
    return normalize_whitespace(out);
}

std::string attribute(const XmlNode &element, const std::string &name) {
    auto it = element.attributes.find(name);
    return it == element.attributes.end() ? std::string() : it->second;
}

bool is_component_name(const std::string &name) {
    if (name == "c")
        return true;
    if (name.size() == 3 && name[0] == 'c' && std::isdigit(static_cast<unsigned char>(name[1])) &&
        std::isdigit(static_cast<unsigned char>(name[2]))) {
        const int number = (name[1] - '0') * 10 + (name[2] - '0');
        return number >= 1 && number <= 12;
    }
    return false;
}

constexpr std::array<const char *, 10> kNoteNames = {
    "scopecontent", "bioghist",     "accessrestrict", "userestrict",  "appraisal",
    "accruals",     "arrangement",  "phystech",       "originalsloc", "altformavail",
};

void append_joined(std::optional<std::string> &field, const std::string &value, const char *separator) {
    if (value.empty())
        return;
    if (field && !field->empty())
        *field += separator + value;
    else
        field = value;
}

void parse_did(const XmlNode &did, ArchivalUnit &unit, RepositoryRecord *repository) {
    for (const XmlNode &child : did.children) {
        if (child.kind != XmlNode::Kind::Element)
            continue;
        if (child.name == "unittitle") {
            append_joined(unit.title, flattened_text(child), "; ");
        } else if (child.name == "unitdate") {
            const std::string normal = attribute(child, "normal");
            append_joined(unit.dates, normal.empty() ? flattened_text(child) : normalize_whitespace(normal), ", ");
        } else if (child.name == "unitid") {
            append_joined(unit.reference_code, flattened_text(child), "; ");
        } else if (child.name == "physdesc") {
            bool saw_extent = false;
            for (const XmlNode &grandchild : child.children) {
                if (grandchild.kind == XmlNode::Kind::Element && grandchild.name == "extent") {
                    saw_extent = true;
                    const std::string text = flattened_text(grandchild);
                    if (text.empty())
                        continue;
                    const std::size_t space = text.find(' ');
                    if (space == std::string::npos)
                        unit.extents.push_back(ExtentStatement::textual(text));
                    else
                        unit.extents.push_back(classify_extent(text.substr(0, space), text.substr(space + 1)));
                } else if (grandchild.kind == XmlNode::Kind::Element) {
                    unit.extra_elements.push_back({Standard::EAD, "physdesc/" + grandchild.name});
                }
            }
            if (!saw_extent) {
                const std::string text = flattened_text(child);
                if (!text.empty())
                    unit.extra_elements.push_back({Standard::EAD, "physdesc"});
            }
        } else if (child.name == "origination") {
            for (const XmlNode &grandchild : child.children) {
                if (grandchild.kind == XmlNode::Kind::Text) {
                    const std::string name = normalize_whitespace(grandchild.text);
                    if (!name.empty())
                        unit.agents.push_back({name, AgentKind::PERSON, std::nullopt, AgentRole::CREATOR});
                    continue;
                }
                AgentKind kind = AgentKind::PERSON;
                if (grandchild.name == "corpname")
                    kind = AgentKind::CORPORATE_BODY;
                else if (grandchild.name == "famname")
                    kind = AgentKind::FAMILY;
                else if (grandchild.name != "persname" && grandchild.name != "name") {
                    unit.extra_elements.push_back({Standard::EAD, "origination/" + grandchild.name});
                    continue;
                }
                const std::string name = flattened_text(grandchild);
                if (!name.empty())
                    unit.agents.push_back({name, kind, std::nullopt, AgentRole::CREATOR});
            }
        } else if (child.name == "langmaterial") {
            bool saw_language = false;
            for (const XmlNode &grandchild : child.children) {
                if (grandchild.kind == XmlNode::Kind::Element && grandchild.name == "language") {
                    saw_language = true;
                    const std::string language = flattened_text(grandchild);
                    if (!language.empty())
                        unit.languages.push_back(language);
                }
            }
            if (!saw_language) {
                const std::string text = flattened_text(child);
                if (!text.empty())
                    unit.languages.push_back(text);
            }
        } else if (child.name == "repository") {
            if (!repository)
                continue; // component-level repository placement is ignored
            std::string name;
            std::string address;
            for (const XmlNode &grandchild : child.children) {
                if (grandchild.kind == XmlNode::Kind::Text) {
                    name += grandchild.text;
                } else if (grandchild.name == "address") {
                    if (!address.empty())
                        address += ", ";
                    address += flattened_text(grandchild);
                } else {
                    name += ' ' + flattened_text(grandchild) + ' ';
                }
            }
            repository->name = normalize_whitespace(name);
            if (!address.empty())
                repository->address = address;
        } else {
            unit.extra_elements.push_back({Standard::EAD, child.name});
        }
    }
}

void parse_descriptive_element(const XmlNode &element, ArchivalUnit &unit) {
    if (is_recognized_note(element.name)) {
        NoteField note;
        note.ref = classify_note(element.name);
        note.text = flattened_text(element);
        if (note.text.empty())
            return; // empty notes are dropped at ingest
        if (const XmlNode *head = find_element(element, "head")) {
            std::string head_text;
            for (const XmlNode &child : head->children)
                if (child.kind == XmlNode::Kind::Text)
                    head_text += child.text;
            const std::string label = normalize_whitespace(head_text);
            if (!label.empty())
                note.label = label;
        }
        unit.notes.push_back(std::move(note));
        return;
    }
    unit.extra_elements.push_back({Standard::EAD, element.name});
}

ArchivalUnit parse_component(const XmlNode &element, RepositoryRecord *repository);

void parse_dsc(const XmlNode &dsc, ArchivalUnit &unit) {
    for (const XmlNode &child : dsc.children) {
        if (child.kind != XmlNode::Kind::Element)
            continue;
        if (is_component_name(child.name))
            unit.children.push_back(parse_component(child, nullptr));
        else if (child.name == "dsc") // nested dsc is legal EAD 2002
            parse_dsc(child, unit);
    }
}

void parse_unit_children(const XmlNode &element, ArchivalUnit &unit, RepositoryRecord *repository) {
    const std::string level = attribute(element, "level");
    if (!level.empty())
        unit.level = normalize_whitespace(level);
    for (const XmlNode &child : element.children) {
        if (child.kind != XmlNode::Kind::Element)
            continue;
        if (child.name == "did") {
            parse_did(child, unit, repository);
        } else if (child.name == "dsc") {
            parse_dsc(child, unit);
        } else if (is_component_name(child.name)) {
            unit.children.push_back(parse_component(child, nullptr));
        } else {
            parse_descriptive_element(child, unit);
        }
    }
}

ArchivalUnit parse_component(const XmlNode &element, RepositoryRecord *repository) {
    ArchivalUnit unit;
    parse_unit_children(element, unit, repository);
    return unit;
}

} // namespace

SourceElementRef classify_note(const std::string &ead_element_name) {
    return {Standard::EAD, ead_element_name};
}

bool is_recognized_note(const std::string &ead_element_name) {
    for (const char *name : kNoteNames)
        if (ead_element_name == name)
            return true;
    return false;
}

DescriptionTree parse_ead(std::string_view document) {
    const XmlNode dom = parse_document(document);

    const XmlNode *archdesc = find_element(dom, "archdesc");
    if (!archdesc)
        throw MissingArchdesc("document has no archdesc element");

    DescriptionTree tree;
    tree.source_format = SourceFormat::EAD;
    tree.root = parse_component(*archdesc, &tree.repository);

    // eadheader content is description control: tallied, never modeled.
    if (const XmlNode *header = find_element(dom, "eadheader")) {
        tree.root.extra_elements.push_back({Standard::EAD, "eadheader"});
        if (tree.repository.name.empty()) {
            if (const XmlNode *publisher = find_element(*header, "publisher"))
                tree.repository.name = flattened_text(*publisher);
        }
    }
    return tree;
}

} // namespace archemap
