#pragma once

#include <unistd.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gramsteg/bmp_image.hpp"
#include "gramsteg/error.hpp"
#include "gramsteg/seed_stream.hpp"

namespace gramsteg::testsupport {

inline Image noise_image(std::uint32_t w, std::uint32_t h, std::uint64_t seed) {
  SeedStream s(seed);
  Image img(w, h);
  for (std::uint32_t y = 0; y < h; ++y) {
    for (std::uint32_t x = 0; x < w; ++x) {
      img.set_pixel(x, y, Pixel{static_cast<std::uint8_t>(s.below(256)),
                                static_cast<std::uint8_t>(s.below(256)),
                                static_cast<std::uint8_t>(s.below(256))});
    }
  }
  return img;
}

inline std::string data_path(const std::string& name) {
  return std::string(GRAMSTEG_TEST_DATA_DIR) + "/" + name;
}

inline std::vector<std::uint8_t> read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_bytes(const std::string& path, const std::vector<std::uint8_t>& data) {
  std::ofstream out(path, std::ios::binary);
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("gramsteg_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

// The error code thrown by f, or nullopt if it returned normally.
inline std::optional<Errc> thrown_errc(const std::function<void()>& f) {
  try {
    f();
    return std::nullopt;
  } catch (const Error& e) {
    return e.code();
  }
}

}  // namespace gramsteg::testsupport
