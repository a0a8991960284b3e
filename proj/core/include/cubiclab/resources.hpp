#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cubiclab {

/// Names of the bundled fixture files ("dp-a.cubic", "skew-planes.p1", …).
std::vector<std::string> fixture_files();

/// Content of a bundled fixture file after checking its SHA-256 digest
/// against the manifest. Throws PreconditionError for an unknown name and
/// Error on a digest mismatch.
std::string_view fixture_file(std::string_view name);

/// Manifest digest (hex) of a bundled fixture file.
std::string_view fixture_digest(std::string_view name);

/// Hex SHA-256 of arbitrary bytes.
std::string sha256_hex(std::string_view bytes);

}  // namespace cubiclab
