#pragma once

#include <filesystem>
#include <span>
#include <string>

#include <json.hpp>

namespace erid {

// Hex SHA-256 of the git-blob encoding "blob <size>\0<bytes>" of a file.
std::string git_blob_sha256(const std::filesystem::path& path);

// Writes a JSON run manifest next to a command's outputs: the command name,
// its effective configuration and a content hash per output file. Contains
// no timestamps, so reruns of a deterministic command produce identical
// manifests.
void write_run_manifest(const std::filesystem::path& manifest_path,
                        const std::string& command, const nlohmann::json& config,
                        std::span<const std::filesystem::path> outputs);

}  // namespace erid
