#include "at2ff/pgm.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <optional>
#include <system_error>

#include "atomic_file.hpp"

namespace at2ff {

namespace {

bool is_space(std::uint8_t b) { return std::isspace(static_cast<unsigned char>(b)) != 0; }

// Netpbm header tokenizer: whitespace separated decimals, '#' starts a
// comment that runs to end of line.
class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (is_space(bytes_[pos_])) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  // nullopt at end of input; throws on a non-digit token.
  std::optional<unsigned long> next_number(const char* what) {
    skip_space_and_comments();
    if (pos_ >= bytes_.size()) return std::nullopt;
    if (!std::isdigit(bytes_[pos_])) {
      throw PgmError(PgmErrorKind::MalformedHeader, std::string("expected ") + what + ", found '" +
                                                        static_cast<char>(bytes_[pos_]) + "'");
    }
    unsigned long value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > 0xFFFFFFFFul) {
        throw PgmError(PgmErrorKind::MalformedHeader, std::string(what) + " is too large");
      }
      ++pos_;
    }
    if (pos_ < bytes_.size() && !is_space(bytes_[pos_]) && bytes_[pos_] != '#') {
      throw PgmError(PgmErrorKind::MalformedHeader, std::string("garbage after ") + what);
    }
    return value;
  }

  unsigned long header_number(const char* what) {
    auto v = next_number(what);
    if (!v) throw PgmError(PgmErrorKind::MalformedHeader, std::string("missing ") + what);
    return *v;
  }

  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }
  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

GrayImage decode_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '2')) {
    throw PgmError(PgmErrorKind::MalformedHeader, "not a PGM file (expected magic P5 or P2)");
  }
  const bool binary = bytes[1] == '5';
  if (bytes.size() > 2 && !is_space(bytes[2]) && bytes[2] != '#') {
    throw PgmError(PgmErrorKind::MalformedHeader, "bad magic number");
  }

  Reader reader(bytes);
  reader.advance(2);
  const unsigned long width = reader.header_number("width");
  const unsigned long height = reader.header_number("height");
  const unsigned long maxval = reader.header_number("maxval");
  if (width == 0 || height == 0) {
    throw PgmError(PgmErrorKind::MalformedHeader, "image dimensions must be positive");
  }
  if (maxval == 0) {
    throw PgmError(PgmErrorKind::MalformedHeader, "maxval must be positive");
  }
  if (maxval > 255) {
    throw PgmError(PgmErrorKind::UnsupportedMaxval,
                   "maxval " + std::to_string(maxval) + " exceeds 255 (16-bit PGM unsupported)");
  }

  const std::size_t count = static_cast<std::size_t>(width) * height;
  std::vector<std::uint8_t> pixels;

  if (binary) {
    // Exactly one whitespace byte separates maxval from the raster.
    if (reader.remaining() == 0) {
      throw PgmError(PgmErrorKind::TruncatedPayload, "missing raster");
    }
    reader.advance(1);
    if (reader.remaining() < count) {
      throw PgmError(PgmErrorKind::TruncatedPayload, "raster has " + std::to_string(reader.remaining()) +
                                                         " bytes, expected " + std::to_string(count));
    }
    const auto first = bytes.begin() + static_cast<std::ptrdiff_t>(reader.pos());
    pixels.assign(first, first + static_cast<std::ptrdiff_t>(count));
    for (auto p : pixels) {
      if (p > maxval) throw PgmError(PgmErrorKind::MalformedHeader, "sample exceeds maxval");
    }
  } else {
    pixels.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      auto v = reader.next_number("sample");
      if (!v) {
        throw PgmError(PgmErrorKind::TruncatedPayload,
                       "raster has " + std::to_string(i) + " samples, expected " + std::to_string(count));
      }
      if (*v > maxval) throw PgmError(PgmErrorKind::MalformedHeader, "sample exceeds maxval");
      pixels.push_back(static_cast<std::uint8_t>(*v));
    }
  }
  return GrayImage(width, height, std::move(pixels));
}

std::vector<std::uint8_t> encode_pgm(const GrayImage& img) {
  const std::string header = "P5\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.pixels().begin(), img.pixels().end());
  return out;
}

GrayImage read_pgm_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PgmError(PgmErrorKind::Io, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw PgmError(PgmErrorKind::Io, "read error on " + path.string());
  return decode_pgm(bytes);
}

void write_pgm_file(const std::filesystem::path& path, const GrayImage& img) {
  const auto bytes = encode_pgm(img);
  try {
    detail::write_file_atomic(path, {reinterpret_cast<const char*>(bytes.data()), bytes.size()});
  } catch (const std::runtime_error& e) {
    throw PgmError(PgmErrorKind::Io, e.what());
  }
}

namespace detail {

void write_file_atomic(const std::filesystem::path& path, std::string_view data) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw std::runtime_error("write error on " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cannot rename into " + path.string());
  }
}

}  // namespace detail

}  // namespace at2ff
