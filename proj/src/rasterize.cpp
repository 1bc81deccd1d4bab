#include <algorithm>
#include <cctype>

#include "parldoc/errors.hpp"
#include "parldoc/fsutil.hpp"
#include "parldoc/ingest.hpp"
#include "parldoc/log.hpp"
#include "parldoc/subprocess.hpp"

namespace parldoc::ingest {

namespace fs = std::filesystem;

namespace {

std::string expand_template(const std::string& command_template,
                            const std::string& input,
                            const std::string& output_dir, int dpi) {
  std::string out = command_template;
  auto replace_all = [&out](const std::string& key, const std::string& value) {
    size_t pos = 0;
    while ((pos = out.find(key, pos)) != std::string::npos) {
      out.replace(pos, key.size(), value);
      pos += value.size();
    }
  };
  replace_all("{input}", subprocess::shell_quote(input));
  replace_all("{output_dir}", subprocess::shell_quote(output_dir));
  replace_all("{dpi}", std::to_string(dpi));
  return out;
}

std::optional<int> page_number_from_name(const std::string& name) {
  // page-<n>.png
  if (name.rfind("page-", 0) != 0) return std::nullopt;
  size_t dot = name.rfind(".png");
  if (dot == std::string::npos || dot <= 5) return std::nullopt;
  std::string digits = name.substr(5, dot - 5);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return std::nullopt;
  }
  return std::stoi(digits);
}

}  // namespace

std::vector<PageImage> rasterize_document(const fs::path& pdf_path, int dpi,
                                          const std::string& command_template,
                                          const fs::path& work_dir) {
  if (dpi < 72 || dpi > 600) {
    throw ValidationError("dpi out of range [72, 600]: " + std::to_string(dpi));
  }
  if (!fs::exists(pdf_path)) {
    throw DocumentError("document not found: " + pdf_path.string());
  }
  std::error_code ec;
  auto size = fs::file_size(pdf_path, ec);
  if (ec || size == 0) {
    throw DocumentError("document is empty or unreadable: " + pdf_path.string());
  }
  fsutil::ensure_dir(work_dir);

  std::string cmd =
      expand_template(command_template, pdf_path.string(), work_dir.string(), dpi);
  log::debug("ingest", "rasterizing: " + cmd);
  auto run = subprocess::run_shell(cmd);
  if (run.command_not_found) {
    throw EnvironmentError("rasterizer not found; command was: " + cmd);
  }
  if (run.exit_code != 0) {
    throw DocumentError("rasterizer failed on " + pdf_path.string() + " (exit " +
                        std::to_string(run.exit_code) + "): " + run.output);
  }

  std::vector<std::pair<int, fs::path>> found;
  for (const auto& entry : fs::directory_iterator(work_dir)) {
    if (!entry.is_regular_file()) continue;
    auto number = page_number_from_name(entry.path().filename().string());
    if (number) found.emplace_back(*number, entry.path());
  }
  if (found.empty()) {
    throw DocumentError("rasterizer produced no pages for " + pdf_path.string());
  }
  std::sort(found.begin(), found.end());
  std::vector<PageImage> pages;
  pages.reserve(found.size());
  for (size_t i = 0; i < found.size(); ++i) {
    if (found[i].first != static_cast<int>(i) + 1) {
      throw DocumentError("rasterizer output pages are not contiguous for " +
                          pdf_path.string() + ": expected page-" +
                          std::to_string(i + 1) + ".png");
    }
    PageImage page;
    page.page_number = found[i].first;
    page.image_bytes = fsutil::read_file(found[i].second);
    page.dpi = dpi;
    pages.push_back(std::move(page));
  }
  return pages;
}

}  // namespace parldoc::ingest
