#include "foliage/config.hpp"

#include <fstream>
#include <sstream>

#include "foliage/error.hpp"

namespace foliage {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::string unquote(const std::string& s) {
    if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') ||
                          (s.front() == '\'' && s.back() == '\'')))
        return s.substr(1, s.size() - 2);
    return s;
}

} // namespace

std::map<std::string, std::string> parse_flat_toml(const std::string& text) {
    std::map<std::string, std::string> out;
    std::istringstream in(text);
    std::string line, section;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') {
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            raise(Errc::parse_error, "expected `key = value`: " + line);
        std::string key = trim(line.substr(0, eq));
        std::string value = unquote(trim(line.substr(eq + 1)));
        if (key.empty()) raise(Errc::parse_error, "empty key: " + line);
        out[section.empty() ? key : section + "." + key] = value;
    }
    return out;
}

void ToolConfig::apply(const std::map<std::string, std::string>& kv) {
    auto get = [&](const std::string& key) -> const std::string* {
        auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };
    if (auto v = get("budget_nodes")) budget_nodes = std::stoull(*v);
    if (auto v = get("cap_n")) cap_n = std::stoi(*v);
    if (auto v = get("seed")) seed = std::stoull(*v);
    if (auto v = get("jobs")) jobs = std::stoi(*v);
    if (auto v = get("format")) format = *v;
}

ToolConfig load_config(const std::string& path) {
    ToolConfig cfg;
    std::ifstream in(path);
    if (!in) return cfg;
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    cfg.apply(parse_flat_toml(text));
    return cfg;
}

} // namespace foliage
