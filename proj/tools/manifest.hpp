#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <string>

#include <json.hpp>

namespace eswap::cli {

/// Reproducibility record for one CLI invocation. Round-trips losslessly
/// through its JSON form; re-running with the recorded parameters must
/// reproduce the recorded CSV bytes.
struct RunManifest {
    int schema_version = 1;
    std::string command;
    nlohmann::json parameters = nlohmann::json::object();
    std::uint64_t seed = 0;
    std::string tool_version;
    double duration_seconds = 0.0;
    std::map<std::string, std::string> output_digests;  // filename -> fnv1a64 hex

    nlohmann::json to_json() const {
        return nlohmann::json{{"schema_version", schema_version},
                              {"command", command},
                              {"parameters", parameters},
                              {"seed", seed},
                              {"tool_version", tool_version},
                              {"duration_seconds", duration_seconds},
                              {"output_digests", output_digests}};
    }

    static RunManifest from_json(const nlohmann::json& j) {
        RunManifest m;
        m.schema_version = j.at("schema_version").get<int>();
        m.command = j.at("command").get<std::string>();
        m.parameters = j.at("parameters");
        m.seed = j.at("seed").get<std::uint64_t>();
        m.tool_version = j.at("tool_version").get<std::string>();
        m.duration_seconds = j.at("duration_seconds").get<double>();
        m.output_digests =
            j.at("output_digests").get<std::map<std::string, std::string>>();
        return m;
    }
};

inline std::string fnv1a64_hex_of_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return "";
    std::uint64_t h = 0xCBF29CE484222325ULL;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace eswap::cli
