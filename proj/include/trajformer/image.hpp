#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

namespace trajformer {

struct GrayImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;  // row-major
};

/// Reads 8-bit single-channel PGM (P2/P5) or PNG; other layouts throw DataError.
GrayImage read_gray_image(const std::filesystem::path& path);
/// Binary P5 PGM.
void write_pgm(const std::filesystem::path& path, const GrayImage& image);
void write_png(const std::filesystem::path& path, const GrayImage& image);

}  // namespace trajformer
