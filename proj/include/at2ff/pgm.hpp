#ifndef AT2FF_PGM_HPP
#define AT2FF_PGM_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "at2ff/image.hpp"

namespace at2ff {

enum class PgmErrorKind {
  MalformedHeader,
  UnsupportedMaxval,
  TruncatedPayload,
  Io,
};

class PgmError : public std::runtime_error {
 public:
  PgmError(PgmErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  PgmErrorKind kind() const noexcept { return kind_; }

 private:
  PgmErrorKind kind_;
};

/// Decodes binary (P5) or ASCII (P2) PGM with maxval <= 255. Pixel values
/// are taken verbatim; no rescaling is applied for maxval < 255.
GrayImage decode_pgm(std::span<const std::uint8_t> bytes);

/// Binary P5, maxval 255, single '\n' separators.
std::vector<std::uint8_t> encode_pgm(const GrayImage& img);

GrayImage read_pgm_file(const std::filesystem::path& path);

/// Writes via a sibling temporary file and rename, so a failed write never
/// leaves a partial file at `path`.
void write_pgm_file(const std::filesystem::path& path, const GrayImage& img);

}  // namespace at2ff

#endif  // AT2FF_PGM_HPP
