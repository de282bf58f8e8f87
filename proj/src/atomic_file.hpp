#ifndef AT2FF_SRC_ATOMIC_FILE_HPP
#define AT2FF_SRC_ATOMIC_FILE_HPP

#include <filesystem>
#include <string_view>

namespace at2ff::detail {

// Writes `data` to a temporary sibling of `path`, then renames it into place.
// Throws std::runtime_error on failure; the temporary is removed.
void write_file_atomic(const std::filesystem::path& path, std::string_view data);

}  // namespace at2ff::detail

#endif  // AT2FF_SRC_ATOMIC_FILE_HPP
