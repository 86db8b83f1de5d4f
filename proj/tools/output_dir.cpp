#include "output_dir.hpp"

#include <fstream>
#include <system_error>

#include "emojiprof/error.hpp"

namespace emojiprof::cli {

namespace fs = std::filesystem;

OutputDir::OutputDir(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  if (!fs::exists(dir_, ec)) {
    fs::create_directories(dir_, ec);
    if (ec) throw IoError("cannot create output directory " + dir_.string() + ": " + ec.message());
    created_ = true;
  } else if (!fs::is_directory(dir_, ec)) {
    throw IoError(dir_.string() + " is not a directory");
  }
}

OutputDir::~OutputDir() {
  if (committed_) return;
  std::error_code ec;
  for (const auto& p : written_) fs::remove(p, ec);
  if (created_) fs::remove(dir_, ec);  // only succeeds when empty
}

void OutputDir::write(std::string_view name, std::string_view content) {
  const auto target = file(name);
  auto tmp = target;
  tmp += ".partial";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("failed writing " + target.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move " + tmp.string() + " into place");
  }
  written_.push_back(target);
}

}  // namespace emojiprof::cli
