/*
 * Copyright (c) 2026 the archemap authors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef ARCHEMAP_CLI_HPP
#define ARCHEMAP_CLI_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "archemap/profile.hpp"

namespace archemap::cli {

enum class InputFormat { EAD, ASPACE, AUTO };
enum class OutputFormat { JSONLD, NTRIPLES, HTML };

struct CliConfig {
    std::string base_uri = "https://example.org/archives";
    ModelVariant variant = ModelVariant::ALTERNATIVE;
    InputFormat input_format = InputFormat::AUTO;
    OutputFormat output_format = OutputFormat::JSONLD;
    std::optional<std::filesystem::path> registry_path;
    bool strict = false;
    std::optional<std::filesystem::path> report_path;
    std::optional<std::filesystem::path> out_dir;
};

/// Exit codes: 0 success, 1 any parse/processing error, 2 strict-mode
/// unknown tallies. Nothing else is ever returned.
int cmd_convert(const CliConfig &config, const std::vector<std::filesystem::path> &inputs,
                std::ostream &out, std::ostream &err);

int cmd_validate(const CliConfig &config, const std::vector<std::filesystem::path> &inputs,
                 std::ostream &out, std::ostream &err);

int cmd_report(const CliConfig &config, const std::vector<std::filesystem::path> &inputs,
               std::ostream &out, std::ostream &err);

/// Full argument parsing + dispatch; what main() calls.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace archemap::cli

#endif
