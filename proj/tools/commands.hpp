#pragma once

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace resolvelab::cli {

using Json = nlohmann::ordered_json;

enum class Status
{
    ok,
    violation,
    error
};

auto status_name(Status s) -> std::string;
auto exit_code(Status s) -> int;

struct RunReport
{
    std::string command;
    Json inputs = Json::object();
    Json results = Json::object();
    Status status = Status::ok;
    double elapsed_ms = 0;
};

/// {command, inputs, results, status, elapsed_ms}; elapsed_ms is 0 without timing.
auto to_json(const RunReport & r, bool timing = true) -> Json;

/// Plain text for terminals.
auto render_table(const RunReport & r) -> std::string;

struct DimOptions
{
    std::string input;
    std::string variant = "metric";
    bool ft = false;
    std::optional<std::string> format;
};

struct GenOptions
{
    std::string family;
    unsigned k = 0;
    std::optional<unsigned> q;
    std::optional<std::string> lo;
    std::optional<std::string> hi;
    std::optional<std::string> out;
    std::optional<std::string> labels;
    std::optional<std::string> format;
};

struct FtBuildOptions
{
    std::string input;
    std::string variant = "metric";
    std::string set;
    std::optional<std::string> format;
};

struct VerifyOptions
{
    std::string suite;
    std::optional<std::size_t> max_n;
    std::optional<unsigned> k;
};

struct EkOptions
{
    unsigned k = 0;
    bool strict = false;
    std::optional<std::string> out;
    std::optional<std::string> construct_graph;
};

auto cmd_dim(const DimOptions & o) -> RunReport;
auto cmd_gen(const GenOptions & o) -> RunReport;
auto cmd_ftbuild(const FtBuildOptions & o) -> RunReport;
auto cmd_verify(const VerifyOptions & o) -> RunReport;
auto cmd_ek(const EkOptions & o) -> RunReport;

/// Parses argv, runs the command, writes the report and returns the exit code.
auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int;

}
