/*
 * Copyright (c) 2026 the archemap authors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "archemap/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "archemap/aspace.hpp"
#include "archemap/crosswalk.hpp"
#include "archemap/ead.hpp"
#include "archemap/emit.hpp"
#include "archemap/errors.hpp"

using nlohmann::ordered_json;

namespace archemap::cli {

namespace {

constexpr int kOk = 0;
constexpr int kParseError = 1;
constexpr int kStrictUnknown = 2;

std::string strip_trailing_slashes(std::string uri) {
    while (!uri.empty() && uri.back() == '/')
        uri.pop_back();
    return uri;
}

bool is_absolute_iri(const std::string &uri) {
    const std::size_t colon = uri.find(':');
    if (colon == std::string::npos || colon == 0)
        return false;
    if (!std::isalpha(static_cast<unsigned char>(uri[0])))
        return false;
    return uri.size() > colon + 1;
}

std::string percent_encode(const std::string &text) {
    static const char *hex = "0123456789ABCDEF";
    std::string out;
    for (unsigned char ch : text) {
        if (std::isalnum(ch) || ch == '-' || ch == '_' || ch == '.' || ch == '~') {
            out += static_cast<char>(ch);
        } else {
            out += '%';
            out += hex[ch >> 4];
            out += hex[ch & 0xF];
        }
    }
    return out;
}

Profile load_configured_profile(const CliConfig &config) {
    std::filesystem::path path;
    if (config.registry_path) {
        path = *config.registry_path;
    } else if (const char *env = std::getenv("ARCHEMAP_REGISTRY"); env && *env) {
        path = env;
    } else {
        return load_default_profile(config.variant);
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw MalformedRegistry("registry: cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_profile(buffer.str(), config.variant);
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ArchemapError("cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

InputFormat resolve_format(const CliConfig &config, const std::filesystem::path &input) {
    if (config.input_format != InputFormat::AUTO)
        return config.input_format;
    if (std::filesystem::is_directory(input))
        return InputFormat::ASPACE;
    std::string extension = input.extension().string();
    std::transform(extension.begin(), extension.end(), extension.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (extension == ".xml")
        return InputFormat::EAD;
    throw ArchemapError("cannot infer input format for " + input.string() +
                        " (.xml means EAD, a directory means an ArchivesSpace bundle)");
}

DescriptionTree parse_input(const CliConfig &config, const std::filesystem::path &input) {
    if (resolve_format(config, input) == InputFormat::EAD)
        return parse_ead(read_file(input));
    return parse_aspace(load_bundle(input));
}

std::string input_stem(const std::filesystem::path &input) {
    if (std::filesystem::is_directory(input)) {
        auto name = input.filename().string();
        if (name.empty()) // trailing slash
            name = input.parent_path().filename().string();
        return name;
    }
    return input.stem().string();
}

const char *output_extension(OutputFormat format) {
    switch (format) {
    case OutputFormat::JSONLD:
        return ".jsonld";
    case OutputFormat::NTRIPLES:
        return ".nt";
    case OutputFormat::HTML:
        return ".html";
    }
    return ".out";
}

std::filesystem::path output_path(const CliConfig &config, const std::filesystem::path &input) {
    const std::string name = input_stem(input) + output_extension(config.output_format);
    if (config.out_dir)
        return *config.out_dir / name;
    std::filesystem::path beside = input;
    if (std::filesystem::is_directory(input))
        return input.parent_path() / name;
    beside.replace_filename(name);
    return beside;
}

ordered_json ref_json(const SourceElementRef &ref) {
    ordered_json row;
    row["standard"] = to_string(ref.standard);
    row["element_id"] = ref.element_id;
    return row;
}

// Rows sorted by (standard name, element_id) for diffability.
template <typename Map, typename RowFn>
ordered_json report_rows(const Map &map, RowFn make_row) {
    std::vector<typename Map::const_iterator> order;
    for (auto it = map.begin(); it != map.end(); ++it)
        order.push_back(it);
    std::sort(order.begin(), order.end(), [](auto a, auto b) {
        return std::make_pair(to_string(a->first.standard), a->first.element_id) <
               std::make_pair(to_string(b->first.standard), b->first.element_id);
    });
    ordered_json rows = ordered_json::array();
    for (auto it : order)
        rows.push_back(make_row(it->first, it->second));
    return rows;
}

ordered_json report_to_json(const ConversionReport &report) {
    ordered_json doc;
    doc["mapped"] = report_rows(report.mapped, [](const SourceElementRef &ref, std::size_t count) {
        ordered_json row = ref_json(ref);
        row["count"] = count;
        return row;
    });
    doc["excluded"] = report_rows(report.excluded, [](const SourceElementRef &ref, const ExcludedTally &tally) {
        ordered_json row = ref_json(ref);
        row["reason"] = to_string(tally.gap.reason);
        row["citation"] = tally.gap.citation;
        row["count"] = tally.count;
        return row;
    });
    doc["unknown"] = report_rows(report.unknown, [](const SourceElementRef &ref, std::size_t count) {
        ordered_json row = ref_json(ref);
        row["reason"] = "UNKNOWN";
        row["count"] = count;
        return row;
    });
    doc["unit_count"] = report.unit_count;
    doc["node_count"] = report.node_count;
    return doc;
}

void print_report(const ConversionReport &report, std::ostream &out) {
    out << "Conversion report: " << report.unit_count << " unit(s), " << report.node_count << " node(s), "
        << report.total_tallies() << " source element occurrence(s)\n";
    const ordered_json doc = report_to_json(report);
    out << "  mapped:\n";
    if (doc["mapped"].empty())
        out << "    (none)\n";
    for (const auto &row : doc["mapped"])
        out << "    " << row["standard"].get<std::string>() << " " << row["element_id"].get<std::string>() << "  x"
            << row["count"].get<std::size_t>() << "\n";
    out << "  excluded:\n";
    if (doc["excluded"].empty())
        out << "    (none)\n";
    for (const GapReason reason :
         {GapReason::EXCLUDED_DESCRIPTION_CONTROL, GapReason::EXCLUDED_LEVEL, GapReason::EXCLUDED_REFERENCE_CODE,
          GapReason::NO_MAPPING_IDENTIFIED}) {
        bool header_printed = false;
        for (const auto &row : doc["excluded"]) {
            if (row["reason"].get<std::string>() != to_string(reason))
                continue;
            if (!header_printed) {
                out << "    " << to_string(reason) << " (" << row["citation"].get<std::string>() << ")\n";
                header_printed = true;
            }
            out << "      " << row["standard"].get<std::string>() << " " << row["element_id"].get<std::string>()
                << "  x" << row["count"].get<std::size_t>() << "\n";
        }
    }
    out << "  unknown:\n";
    if (doc["unknown"].empty())
        out << "    (none)\n";
    for (const auto &row : doc["unknown"])
        out << "    " << row["standard"].get<std::string>() << " " << row["element_id"].get<std::string>() << "  x"
            << row["count"].get<std::size_t>() << "\n";
}

void write_file(const std::filesystem::path &path, const std::string &bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw ArchemapError("cannot write " + path.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw ArchemapError("short write to " + path.string());
}

// Inputs are processed in path-sorted order so batch results do not
// depend on argument order.
std::vector<std::filesystem::path> sorted_inputs(std::vector<std::filesystem::path> inputs) {
    std::sort(inputs.begin(), inputs.end(),
              [](const auto &a, const auto &b) { return a.string() < b.string(); });
    inputs.erase(std::unique(inputs.begin(), inputs.end()), inputs.end());
    return inputs;
}

struct BatchOutcome {
    ConversionReport aggregate;
    bool any_parse_error = false;
};

int finish(const CliConfig &config, const BatchOutcome &outcome, std::ostream &err) {
    if (config.report_path)
        write_file(*config.report_path, report_to_json(outcome.aggregate).dump(2) + "\n");
    if (outcome.any_parse_error)
        return kParseError;
    bool any_unknown = false;
    for (const auto &[ref, count] : outcome.aggregate.unknown)
        any_unknown |= count > 0;
    if (config.strict && any_unknown) {
        err << "strict mode: unknown source elements encountered\n";
        return kStrictUnknown;
    }
    return kOk;
}

} // namespace

int cmd_convert(const CliConfig &config, const std::vector<std::filesystem::path> &inputs, std::ostream &out,
                std::ostream &err) {
    Profile profile;
    try {
        profile = load_configured_profile(config);
    } catch (const ArchemapError &e) {
        err << "archemap: " << e.what() << "\n";
        return kParseError;
    }
    const std::string base = strip_trailing_slashes(config.base_uri);

    BatchOutcome outcome;
    std::set<std::string> written;
    for (const std::filesystem::path &input : sorted_inputs(inputs)) {
        try {
            const DescriptionTree tree = parse_input(config, input);
            const std::string file_base = base + "/" + percent_encode(input_stem(input));
            const ConvertResult result = convert(tree, profile, file_base);
            const std::filesystem::path target = output_path(config, input);
            if (!written.insert(target.string()).second)
                throw ArchemapError("output collision: " + target.string() + " already written in this batch");
            std::string bytes;
            switch (config.output_format) {
            case OutputFormat::JSONLD:
                bytes = serialize_jsonld(result.graph, profile);
                break;
            case OutputFormat::NTRIPLES:
                bytes = serialize_ntriples(result.graph, profile);
                break;
            case OutputFormat::HTML:
                bytes = html_snippet(result.graph, profile);
                break;
            }
            write_file(target, bytes);
            out << input.string() << " -> " << target.string() << "\n";
            outcome.aggregate.merge(result.report);
        } catch (const ArchemapError &e) {
            err << "archemap: " << input.string() << ": " << e.what() << "\n";
            outcome.any_parse_error = true;
        }
    }
    return finish(config, outcome, err);
}

int cmd_report(const CliConfig &config, const std::vector<std::filesystem::path> &inputs, std::ostream &out,
               std::ostream &err) {
    Profile profile;
    try {
        profile = load_configured_profile(config);
    } catch (const ArchemapError &e) {
        err << "archemap: " << e.what() << "\n";
        return kParseError;
    }
    const std::string base = strip_trailing_slashes(config.base_uri);

    BatchOutcome outcome;
    for (const std::filesystem::path &input : sorted_inputs(inputs)) {
        try {
            const DescriptionTree tree = parse_input(config, input);
            const std::string file_base = base + "/" + percent_encode(input_stem(input));
            outcome.aggregate.merge(convert(tree, profile, file_base).report);
        } catch (const ArchemapError &e) {
            err << "archemap: " << input.string() << ": " << e.what() << "\n";
            outcome.any_parse_error = true;
        }
    }
    print_report(outcome.aggregate, out);
    if (config.report_path)
        write_file(*config.report_path, report_to_json(outcome.aggregate).dump(2) + "\n");
    return outcome.any_parse_error ? kParseError : kOk;
}

int cmd_validate(const CliConfig &config, const std::vector<std::filesystem::path> &inputs, std::ostream &out,
                 std::ostream &err) {
    Profile profile;
    try {
        profile = load_configured_profile(config);
    } catch (const ArchemapError &e) {
        err << "archemap: " << e.what() << "\n";
        return kParseError;
    }

    bool any_parse_error = false;
    std::size_t violation_count = 0;
    for (const std::filesystem::path &input : sorted_inputs(inputs)) {
        try {
            const Graph graph = parse_jsonld(read_file(input));
            for (const auto &[id, node] : graph.nodes) {
                for (const std::string &violation : validate_node(profile, node)) {
                    out << input.string() << ": " << violation << "\n";
                    ++violation_count;
                }
                for (const auto &[property, values] : node.properties)
                    for (const Value &value : values)
                        if (const auto *ref = std::get_if<NodeRef>(&value))
                            if (!graph.nodes.count(ref->iri)) {
                                out << input.string() << ": " << id << ": unresolved node reference " << ref->iri
                                    << " (property '" << property << "')\n";
                                ++violation_count;
                            }
            }
        } catch (const ArchemapError &e) {
            err << "archemap: " << input.string() << ": " << e.what() << "\n";
            any_parse_error = true;
        }
    }
    if (any_parse_error)
        return kParseError;
    return violation_count == 0 ? kOk : kParseError;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"archemap: archival description to Schema.org linked data"};
    app.require_subcommand(1);

    CliConfig config;
    std::string variant_name = "alternative";
    std::string input_format_name = "auto";
    std::string output_format_name = "jsonld";
    std::string registry;
    std::string report_file;
    std::string out_dir;
    std::vector<std::string> input_args;

    auto add_common = [&](CLI::App *cmd, bool with_conversion_flags) {
        cmd->add_option("inputs", input_args, "input files or bundle directories")->required();
        cmd->add_option("--registry", registry, "registry file (default: built-in; env ARCHEMAP_REGISTRY)");
        cmd->add_option("--variant", variant_name, "model variant: initial|alternative")
            ->check(CLI::IsMember({"initial", "alternative"}));
        if (with_conversion_flags) {
            cmd->add_option("--base-uri", config.base_uri,
                            "base IRI; each input gets <base>/<input-stem> as its node base");
            cmd->add_option("--input-format", input_format_name, "ead|aspace|auto")
                ->check(CLI::IsMember({"ead", "aspace", "auto"}));
            cmd->add_flag("--strict", config.strict, "fail (exit 2) when unknown source elements are tallied");
            cmd->add_option("--report", report_file, "write the conversion report JSON here");
        }
    };

    CLI::App *convert_cmd = app.add_subcommand("convert", "convert finding aids to linked data");
    add_common(convert_cmd, true);
    convert_cmd->add_option("--format", output_format_name, "output format: jsonld|ntriples|html")
        ->check(CLI::IsMember({"jsonld", "ntriples", "html"}));
    convert_cmd->add_option("--out", out_dir, "write outputs into this directory instead of beside inputs");

    CLI::App *validate_cmd = app.add_subcommand("validate", "check emitted JSON-LD against the profile");
    add_common(validate_cmd, false);

    CLI::App *report_cmd = app.add_subcommand("report", "print the conversion/gap report without writing graphs");
    add_common(report_cmd, true);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            out << app.help();
            return kOk;
        }
        err << "archemap: " << e.what() << "\n";
        return kParseError;
    }

    config.variant = *variant_from_string(variant_name);
    if (input_format_name == "ead")
        config.input_format = InputFormat::EAD;
    else if (input_format_name == "aspace")
        config.input_format = InputFormat::ASPACE;
    if (output_format_name == "ntriples")
        config.output_format = OutputFormat::NTRIPLES;
    else if (output_format_name == "html")
        config.output_format = OutputFormat::HTML;
    if (!registry.empty())
        config.registry_path = registry;
    if (!report_file.empty())
        config.report_path = report_file;
    if (!out_dir.empty()) {
        config.out_dir = out_dir;
        std::error_code ec;
        std::filesystem::create_directories(*config.out_dir, ec);
    }
    config.base_uri = strip_trailing_slashes(config.base_uri);
    if (!is_absolute_iri(config.base_uri)) {
        err << "archemap: --base-uri must be an absolute IRI\n";
        return kParseError;
    }

    std::vector<std::filesystem::path> inputs(input_args.begin(), input_args.end());
    if (convert_cmd->parsed())
        return cmd_convert(config, inputs, out, err);
    if (validate_cmd->parsed())
        return cmd_validate(config, inputs, out, err);
    return cmd_report(config, inputs, out, err);
}

} // namespace archemap::cli
