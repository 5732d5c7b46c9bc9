/*
 * Copyright (c) 2026 the archemap authors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef ARCHEMAP_EAD_HPP
#define ARCHEMAP_EAD_HPP

#include <string>
#include <string_view>

#include "archemap/model.hpp"

namespace archemap {

/// Parses an EAD 2002 finding aid into a DescriptionTree. Element
/// matching is namespace-insensitive by local name; numbered (c01) and
/// unnumbered (c) components are treated identically. Throws MalformedXml
/// for unparseable input and MissingArchdesc when no archdesc exists.
DescriptionTree parse_ead(std::string_view document);

/// SourceElementRef for an EAD note element name; unrecognized names pass
/// through with the literal element name.
SourceElementRef classify_note(const std::string &ead_element_name);

/// True for the ten note categories the profile tracks by name.
bool is_recognized_note(const std::string &ead_element_name);

} // namespace archemap

#endif
