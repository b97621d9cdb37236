#pragma once

#include <map>
#include <string>

namespace gknn {

inline constexpr const char* kToolName = "gknn";
inline constexpr const char* kToolVersion = "0.1.0";

// Reproducibility sidecar written next to every output file. Contains no
// timestamps: rerunning a command with the same manifest must reproduce the
// outputs byte-identically.
struct RunManifest {
    std::string subcommand;
    std::map<std::string, std::string> parameters;
    std::map<std::string, std::string> input_digests; // path -> fnv1a64 hex
};

std::string manifest_path_for(const std::string& output_path);
void add_input_digest(RunManifest& manifest, const std::string& path);
void write_manifest(const RunManifest& manifest, const std::string& output_path);

} // namespace gknn
