#pragma once

#include <map>
#include <string>

namespace foliage {

/// Flat key/value subset of TOML: `key = value` lines, `#` comments, quoted
/// or bare scalars. Section headers are accepted and flattened to
/// `section.key`. Covers everything foliage.toml needs; nested tables are not.
std::map<std::string, std::string> parse_flat_toml(const std::string& text);

/// Tool configuration, merged defaults < foliage.toml < command-line flags.
struct ToolConfig {
    uint64_t budget_nodes = 100'000'000;
    int cap_n = 6;
    uint64_t seed = 1;
    int jobs = 0;
    std::string format = "json";

    void apply(const std::map<std::string, std::string>& kv);
};

/// Reads `path` when it exists; missing files yield defaults.
ToolConfig load_config(const std::string& path);

} // namespace foliage
