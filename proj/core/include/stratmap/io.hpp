#ifndef STRATMAP_IO_HPP
#define STRATMAP_IO_HPP

#include <filesystem>
#include <string>

namespace stratmap {

/// Reads a whole file as bytes. Throws std::runtime_error if unreadable.
std::string read_text_file(const std::filesystem::path& path);

/// Writes bytes exactly as given (binary mode, so "\n" stays "\n").
void write_text_file(const std::filesystem::path& path, std::string_view content);

} // namespace stratmap

#endif
