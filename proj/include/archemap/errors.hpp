/*
 * Copyright (c) 2026 the archemap authors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef ARCHEMAP_ERRORS_HPP
#define ARCHEMAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace archemap {

/// Base class for all archemap failures. Every error carries a
/// human-readable message; the CLI maps any ArchemapError to exit code 1.
class ArchemapError : public std::runtime_error {
public:
    explicit ArchemapError(const std::string &message) : std::runtime_error(message) {}
};

// Ingest errors.
class MalformedXml : public ArchemapError {
public:
    using ArchemapError::ArchemapError;
};

class MissingArchdesc : public ArchemapError {
public:
    using ArchemapError::ArchemapError;
};

class MalformedBundle : public ArchemapError {
public:
    using ArchemapError::ArchemapError;
};

class InconsistentTree : public ArchemapError {
public:
    using ArchemapError::ArchemapError;
};

// Profile errors.
class DuplicateSource : public ArchemapError {
public:
    using ArchemapError::ArchemapError;
};

class UndeclaredTerm : public ArchemapError {
public:
    using ArchemapError::ArchemapError;
};

class MalformedRegistry : public ArchemapError {
public:
    using ArchemapError::ArchemapError;
};

// Crosswalk errors.
class DanglingReference : public ArchemapError {
public:
    using ArchemapError::ArchemapError;
};

class InvalidTree : public ArchemapError {
public:
    using ArchemapError::ArchemapError;
};

// Emit errors.
class MalformedJsonLd : public ArchemapError {
public:
    using ArchemapError::ArchemapError;
};

} // namespace archemap

#endif
