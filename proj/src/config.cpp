// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.

#include "lra/config.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "lra/util.hpp"

namespace lra {

void LraConfig::validate() const {
  auto require = [](bool ok, std::string_view what) {
    if (!ok) throw std::invalid_argument("config: " + std::string(what));
  };
  require(num_sim >= 1, "num_sim must be >= 1");
  require(max_phrase >= 3, "max_phrase must be >= 3");
  require(num_filter >= 1, "num_filter must be >= 1");
  require(num_patterns >= 1, "num_patterns must be >= 1");
  require(k >= 1, "k must be >= 1");
  require(min_inter >= 1, "min_inter must be >= 1");
  require(min_inter <= max_inter, "min_inter must be <= max_inter");
  require(max_inter == max_phrase - 2, "max_inter must equal max_phrase - 2");
}

LraConfig LraConfig::parse(std::string_view text, std::string_view source_name) {
  LraConfig config;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos
                                                                            : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
    if (line.empty() || line.front() == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw std::runtime_error(std::string(source_name) + ":" + std::to_string(line_no) +
                               ": expected key=value");
    }
    std::string key(line.substr(0, eq));
    std::string_view val = line.substr(eq + 1);
    std::uint32_t num = 0;
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), num);
    if (ec != std::errc() || ptr != val.data() + val.size()) {
      throw std::runtime_error(std::string(source_name) + ":" + std::to_string(line_no) +
                               ": bad value for " + key);
    }
    if (key == "num_sim") config.num_sim = num;
    else if (key == "max_phrase") config.max_phrase = num;
    else if (key == "num_filter") config.num_filter = num;
    else if (key == "min_inter") config.min_inter = num;
    else if (key == "max_inter") config.max_inter = num;
    else if (key == "num_patterns") config.num_patterns = num;
    else if (key == "k") config.k = num;
    else {
      throw std::runtime_error(std::string(source_name) + ":" + std::to_string(line_no) +
                               ": unknown key: " + key);
    }
  }
  config.validate();
  return config;
}

LraConfig LraConfig::load(const std::filesystem::path& path) {
  return parse(read_file(path), path.string());
}

std::string LraConfig::to_key_values() const {
  std::ostringstream ss;
  ss << "num_sim=" << num_sim << "\nmax_phrase=" << max_phrase
     << "\nnum_filter=" << num_filter << "\nmin_inter=" << min_inter
     << "\nmax_inter=" << max_inter << "\nnum_patterns=" << num_patterns
     << "\nk=" << k << "\n";
  return ss.str();
}

}  // namespace lra
