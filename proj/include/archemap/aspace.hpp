/*
 * Copyright (c) 2026 the archemap authors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef ARCHEMAP_ASPACE_HPP
#define ARCHEMAP_ASPACE_HPP

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "archemap/model.hpp"

namespace archemap {

/// A file-based ArchivesSpace-style export: resource + tree + repository
/// documents, plus component and agent documents keyed by their ids.
/// See docs/aspace_format.md for the exact field subset.
struct AspaceBundle {
    nlohmann::ordered_json resource_doc;
    nlohmann::ordered_json tree_doc;
    nlohmann::ordered_json repository_doc;
    std::map<std::string, nlohmann::ordered_json> component_docs;
    std::map<std::string, nlohmann::ordered_json> agent_docs;
};

/// Reads a bundle directory (resource.json, tree.json, repository.json,
/// optional components/*.json and agents/*.json). Throws MalformedBundle.
AspaceBundle load_bundle(const std::filesystem::path &directory);

/// Converts a bundle into a DescriptionTree. Unpublished components are
/// pruned (tallied as unknown). Throws MalformedBundle for missing or
/// malformed documents/fields, InconsistentTree for dangling tree refs.
DescriptionTree parse_aspace(const AspaceBundle &bundle);

} // namespace archemap

#endif
