#pragma once

#include <optional>
#include <string>

#include "graphscat/graph_spec.hpp"
#include "graphscat/verify.hpp"

namespace graphscat {

/// On-disk instance: `a` real, `b` a list of [re, im] pairs, `D` a list of
/// rows of [re, im] pairs, optional metadata {name, seed}.
struct InstanceFile {
    GraphSpec spec;
    std::string name;
    std::optional<std::uint64_t> seed;
};

/// Parse and validate. Throws ParseError with a field diagnostic, or the
/// validate() errors for semantic failures.
InstanceFile parse_instance(const std::string& text);
InstanceFile read_instance(const std::string& path);

std::string instance_to_json(const GraphSpec& spec, const std::string& name = "",
                             std::optional<std::uint64_t> seed = std::nullopt);
void write_instance(const GraphSpec& spec, const std::string& path,
                    const std::string& name = "",
                    std::optional<std::uint64_t> seed = std::nullopt);

std::string report_to_json(const VerificationReport& rep);
std::string fuzz_summary_to_json(const FuzzSummary& sum);

} // namespace graphscat
