#include "burnside/config.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <stdexcept>

#include "burnside/errors.hpp"

#ifndef BURNSIDE_VERSION
#define BURNSIDE_VERSION "0.0.0"
#endif

namespace burnside {

std::string version() { return BURNSIDE_VERSION; }

void Config::validate() const {
  const auto& k = constants;
  if (!(k.c >= 2)) throw std::invalid_argument("config: c must be at least 2");
  if (!(k.c1 > 0 && k.c2 > 0 && k.c3 > 0 && k.c4 > 0)) {
    throw std::invalid_argument("config: c1..c4 must be positive");
  }
  if (!(c_lower > 0)) throw std::invalid_argument("config: c_lower must be positive");
  if (k.sporadic_max.is_zero()) throw std::invalid_argument("config: SPORADIC_MAX must be positive");
  if (cayley_cap == 0 || exhaust_cap == 0) throw std::invalid_argument("config: caps must be positive");
  if (threads == 0) throw std::invalid_argument("config: threads must be positive");
}

Config Config::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError(0, "config must be a JSON object");
  static const std::set<std::string> known = {"c",     "c1",          "c2",         "c3",     "c4",
                                              "c_lower", "sporadic_max", "cayley_cap", "exhaust_cap",
                                              "seed",  "threads",     "format"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) throw std::invalid_argument("config: unknown key '" + key + "'");
  }
  Config c;
  try {
    auto get_d = [&](const char* key, double& out) {
      if (j.contains(key)) out = j.at(key).get<double>();
    };
    get_d("c", c.constants.c);
    get_d("c1", c.constants.c1);
    get_d("c2", c.constants.c2);
    get_d("c3", c.constants.c3);
    get_d("c4", c.constants.c4);
    get_d("c_lower", c.c_lower);
    if (j.contains("sporadic_max")) {
      const auto& v = j.at("sporadic_max");
      c.constants.sporadic_max =
          v.is_string() ? TowerNumber::parse(v.get<std::string>()) : TowerNumber::from_real(v.get<double>());
    }
    if (j.contains("cayley_cap")) c.cayley_cap = j.at("cayley_cap").get<std::uint64_t>();
    if (j.contains("exhaust_cap")) c.exhaust_cap = j.at("exhaust_cap").get<std::uint64_t>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("threads")) c.threads = j.at("threads").get<unsigned>();
    if (j.contains("format")) {
      const auto f = j.at("format").get<std::string>();
      if (f == "text") {
        c.format = OutputFormat::Text;
      } else if (f == "json") {
        c.format = OutputFormat::Json;
      } else {
        throw std::invalid_argument("config: format must be \"text\" or \"json\"");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("config: ") + e.what());
  }
  c.validate();
  return c;
}

Config Config::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, path + ": " + e.what());
  }
  return from_json(j);
}

Config Config::from_environment() {
  const char* path = std::getenv("BURNSIDE_CONFIG");
  if (path == nullptr || *path == '\0') return Config{};
  return from_file(path);
}

nlohmann::ordered_json Config::to_json() const {
  nlohmann::ordered_json j;
  j["c"] = constants.c;
  j["c1"] = constants.c1;
  j["c2"] = constants.c2;
  j["c3"] = constants.c3;
  j["c4"] = constants.c4;
  j["c_lower"] = c_lower;
  const auto& s = constants.sporadic_max;
  j["sporadic_max"] = "E_" + std::to_string(s.height()) + "(" + s.index_string(40) + ")";
  j["cayley_cap"] = cayley_cap;
  j["exhaust_cap"] = exhaust_cap;
  j["seed"] = seed;
  j["threads"] = threads;
  j["format"] = format == OutputFormat::Json ? "json" : "text";
  return j;
}

}  // namespace burnside
