#pragma once

// Minimal subprocess capture + a small schema checker for the CLI tests.

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace clonekit::testing {

struct run_result {
    int exit_code;
    std::string out;
};

inline run_result run_cli(const std::string& args) {
    std::string cmd = std::string(CLONEKIT_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    run_result r{-1, {}};
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Validates the subset of JSON Schema the shipped schemas use: type, required,
// properties, items, enum.
inline bool matches_schema(const nlohmann::json& value, const nlohmann::json& schema,
                           std::string* why = nullptr) {
    auto complain = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (schema.contains("type")) {
        const std::string t = schema["type"].get<std::string>();
        bool ok = (t == "object" && value.is_object()) ||
                  (t == "array" && value.is_array()) ||
                  (t == "string" && value.is_string()) ||
                  (t == "integer" && value.is_number_integer()) ||
                  (t == "boolean" && value.is_boolean());
        if (!ok) return complain("expected " + t + ", got " + value.dump());
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& e : schema["enum"])
            if (e == value) ok = true;
        if (!ok) return complain("value " + value.dump() + " not in enum");
    }
    if (schema.contains("required"))
        for (const auto& key : schema["required"])
            if (!value.contains(key.get<std::string>()))
                return complain("missing required key " + key.get<std::string>());
    if (schema.contains("properties") && value.is_object())
        for (auto it = value.begin(); it != value.end(); ++it) {
            if (!schema["properties"].contains(it.key())) continue;
            if (!matches_schema(it.value(), schema["properties"][it.key()], why))
                return false;
        }
    if (schema.contains("items") && value.is_array())
        for (const auto& item : value)
            if (!matches_schema(item, schema["items"], why)) return false;
    return true;
}

inline nlohmann::json load_schema(const std::string& name) {
    std::ifstream in(std::string(CLONEKIT_SCHEMA_DIR) + "/" + name + ".json");
    return nlohmann::json::parse(in);
}

} // namespace clonekit::testing
