#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <ostream>
#include <string>

namespace conet {

// Writes via a temp file in the target directory, then renames into place.
// On any exception the temp file is removed and nothing is left behind, so
// consumers never observe a partial output.
void atomic_write(const std::filesystem::path& path,
                  const std::function<void(std::ostream&)>& fn);

// FNV-1a 64-bit digest of a file's bytes, as 16 lowercase hex digits.
// Used to fingerprint inputs in run manifests (not a cryptographic hash).
std::string file_digest(const std::filesystem::path& path);

std::uint64_t fnv1a64(const void* data, std::size_t size, std::uint64_t state = 0xCBF29CE484222325ULL);

} // namespace conet
