#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace emojiprof::cli {

// Output directory that forgets everything it wrote unless commit() is called.
class OutputDir {
 public:
  explicit OutputDir(std::filesystem::path dir);
  ~OutputDir();
  OutputDir(const OutputDir&) = delete;
  OutputDir& operator=(const OutputDir&) = delete;

  const std::filesystem::path& path() const noexcept { return dir_; }
  std::filesystem::path file(std::string_view name) const { return dir_ / name; }

  // Writes atomically (temp file + rename) and records the file for cleanup.
  void write(std::string_view name, std::string_view content);
  void commit() noexcept { committed_ = true; }

 private:
  std::filesystem::path dir_;
  bool created_ = false;
  bool committed_ = false;
  std::vector<std::filesystem::path> written_;
};

}  // namespace emojiprof::cli
