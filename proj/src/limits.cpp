#include "satlab/limits.hpp"
#include "satlab/errors.hpp"

#include <cstdlib>
#include <sstream>

namespace satlab {

Limits Limits::parse(const std::string& text) {
  Limits lim;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ParseError("limits: expected key=value, got '" + item + "'");
    std::string key = item.substr(0, eq);
    long long val;
    try {
      val = std::stoll(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw ParseError("limits: bad number in '" + item + "'");
    }
    if (val < 0) throw ParseError("limits: negative value in '" + item + "'");
    if (key == "n") {
      lim.canonical_n = static_cast<int>(val);
      lim.search_n = static_cast<int>(val);
    } else if (key == "clique") {
      lim.clique_n = static_cast<int>(val);
    } else if (key == "chrom") {
      lim.chromatic_n = static_cast<int>(val);
    } else if (key == "ground") {
      lim.ground = static_cast<int>(val);
    } else if (key == "length") {
      lim.length = static_cast<int>(val);
    } else if (key == "construct") {
      lim.construct_n = static_cast<int>(val);
    } else if (key == "pairs") {
      lim.sys_pairs = val;
    } else if (key == "canon_nodes") {
      lim.canon_nodes = val;
    } else {
      throw ParseError("limits: unknown key '" + key + "'");
    }
  }
  return lim;
}

Limits Limits::from_env() {
  const char* env = std::getenv("SATLAB_LIMITS");
  if (!env || !*env) return Limits{};
  return parse(env);
}

} // namespace satlab
