#include "rotflow/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

namespace rotflow::cli {

namespace {

using nlohmann::json;

enum class Kind { real, count, integer, seed, real_list, path };

struct KeySpec {
  std::string name;
  Kind kind;
  std::function<void(RunConfig&, const json&)> set;
  std::function<json(RunConfig)> get;
};

[[noreturn]] void bad_type(const std::string& key, const char* expected, const json& v) {
  throw ConfigError("config key '" + key + "' expects " + expected + ", got " + v.dump());
}

double as_real(const std::string& key, const json& v) {
  if (!v.is_number()) bad_type(key, "a number", v);
  const double d = v.get<double>();
  if (!std::isfinite(d)) bad_type(key, "a finite number", v);
  return d;
}

std::size_t as_count(const std::string& key, const json& v) {
  if (v.is_number_unsigned()) return v.get<std::size_t>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (d >= 0.0 && d == std::floor(d) && d < 1e15) return static_cast<std::size_t>(d);
  }
  bad_type(key, "a non-negative integer", v);
}

std::vector<double> as_real_list(const std::string& key, const json& v) {
  if (!v.is_array()) bad_type(key, "an array of numbers", v);
  std::vector<double> out;
  for (const auto& e : v) out.push_back(as_real(key, e));
  return out;
}

template <class Member>
KeySpec real_key(std::string name, Member member) {
  return {name, Kind::real, [name, member](RunConfig& c, const json& v) { member(c) = as_real(name, v); },
          [member](RunConfig c) { return json(member(c)); }};
}

template <class Member>
KeySpec count_key(std::string name, Member member) {
  return {name, Kind::count, [name, member](RunConfig& c, const json& v) { member(c) = as_count(name, v); },
          [member](RunConfig c) { return json(member(c)); }};
}

template <class Member>
KeySpec list_key(std::string name, Member member) {
  return {name, Kind::real_list, [name, member](RunConfig& c, const json& v) { member(c) = as_real_list(name, v); },
          [member](RunConfig c) { return json(member(c)); }};
}

const std::vector<KeySpec>& key_table() {
  static const std::vector<KeySpec> table = [] {
    std::vector<KeySpec> t;
    t.push_back(real_key("geometry.rho", [](RunConfig& c) -> double& { return c.geometry.rho; }));
    t.push_back(real_key("geometry.R", [](RunConfig& c) -> double& { return c.geometry.R; }));
    t.push_back(real_key("geometry.r0", [](RunConfig& c) -> double& { return c.geometry.r0; }));
    t.push_back(real_key("geometry.T", [](RunConfig& c) -> double& { return c.geometry.T; }));
    t.push_back(real_key("params.lambda", [](RunConfig& c) -> double& { return c.params.lambda; }));
    t.push_back(real_key("params.epsilon", [](RunConfig& c) -> double& { return c.params.epsilon; }));
    t.push_back(count_key("grid.n_r", [](RunConfig& c) -> std::size_t& { return c.n_r; }));
    t.push_back(count_key("grid.n_theta", [](RunConfig& c) -> std::size_t& { return c.n_theta; }));
    t.push_back(count_key("grid.n_t", [](RunConfig& c) -> std::size_t& { return c.n_t; }));
    t.push_back({"grid.quad_order", Kind::integer,
                 [](RunConfig& c, const json& v) {
                   const std::size_t n = as_count("grid.quad_order", v);
                   if (n < 1 || n > 64) throw ConfigError("config key 'grid.quad_order' must lie in [1, 64]");
                   c.quad_order = static_cast<int>(n);
                 },
                 [](RunConfig c) { return json(c.quad_order); }});
    t.push_back(list_key("sweep.epsilon", [](RunConfig& c) -> std::vector<double>& { return c.epsilon_list; }));
    t.push_back(list_key("sweep.nu", [](RunConfig& c) -> std::vector<double>& { return c.nu_list; }));
    t.push_back(list_key("sweep.eps_cutoff", [](RunConfig& c) -> std::vector<double>& { return c.eps_cutoff_list; }));
    t.push_back(count_key("energy.n_times", [](RunConfig& c) -> std::size_t& { return c.energy_samples; }));
    t.push_back(list_key("burgers.cells", [](RunConfig& c) -> std::vector<double>& { return c.burgers_cells; }));
    t.push_back(real_key("burgers.t", [](RunConfig& c) -> double& { return c.burgers_time; }));
    t.push_back(count_key("viscosity.n_intervals", [](RunConfig& c) -> std::size_t& { return c.viscosity_intervals; }));
    t.push_back(real_key("viscosity.dt", [](RunConfig& c) -> double& { return c.viscosity_dt; }));
    t.push_back(real_key("viscosity.t_probe", [](RunConfig& c) -> double& { return c.viscosity_time; }));
    t.push_back(real_key("boundary.holder_alpha", [](RunConfig& c) -> double& { return c.holder_alpha; }));
    t.push_back(count_key("residual.points", [](RunConfig& c) -> std::size_t& { return c.residual_points; }));
    t.push_back(list_key("residual.h", [](RunConfig& c) -> std::vector<double>& { return c.residual_steps; }));
    t.push_back({"output.dir", Kind::path,
                 [](RunConfig& c, const json& v) {
                   if (!v.is_string()) bad_type("output.dir", "a string", v);
                   c.output_dir = v.get<std::string>();
                 },
                 [](RunConfig c) { return json(c.output_dir.string()); }});
    t.push_back({"seed", Kind::seed,
                 [](RunConfig& c, const json& v) {
                   if (!v.is_number_unsigned()) bad_type("seed", "an unsigned 64-bit integer", v);
                   c.seed = v.get<std::uint64_t>();
                 },
                 [](RunConfig c) { return json(c.seed); }});
    return t;
  }();
  return table;
}

const KeySpec* find_key(const std::string& name) {
  for (const auto& k : key_table())
    if (k.name == name) return &k;
  return nullptr;
}

void flatten_into(const json& node, const std::string& prefix, json& out) {
  for (auto it = node.begin(); it != node.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object())
      flatten_into(*it, key, out);
    else
      out[key] = *it;
  }
}

double parse_number(const std::string& key, std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
    throw ConfigError("cannot parse '" + std::string(s) + "' as a number for '" + key + "'");
  return v;
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& k : key_table()) n.push_back(k.name);
    return n;
  }();
  return names;
}

const std::vector<std::string>& required_keys() {
  static const std::vector<std::string> names{"geometry.rho", "geometry.R", "geometry.r0",
                                              "geometry.T",   "params.lambda", "params.epsilon"};
  return names;
}

json flatten_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("configuration must be a JSON object");
  json flat = json::object();
  flatten_into(doc, "", flat);
  return flat;
}

RunConfig apply_config(RunConfig base, const json& flat, bool require_core) {
  if (!flat.is_object()) throw ConfigError("configuration must be a JSON object");
  for (auto it = flat.begin(); it != flat.end(); ++it) {
    const KeySpec* k = find_key(it.key());
    if (!k) throw ConfigError("unknown config key '" + it.key() + "'");
    k->set(base, *it);
  }
  if (require_core)
    for (const auto& name : required_keys())
      if (!flat.contains(name)) throw ConfigError("missing required config key '" + name + "'");
  return base;
}

RunConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file " + path.string() + " is not valid JSON: " + e.what());
  }
  return apply_config(RunConfig{}, flatten_config(doc), true);
}

json parse_override(const std::string& key, const std::string& text) {
  const KeySpec* k = find_key(key);
  if (!k) throw ConfigError("unknown config key '" + key + "'");
  switch (k->kind) {
    case Kind::real:
      return parse_number(key, text);
    case Kind::count:
    case Kind::integer:
    case Kind::seed: {
      std::uint64_t v = 0;
      const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc() || ptr != text.data() + text.size())
        throw ConfigError("cannot parse '" + text + "' as a non-negative integer for '" + key + "'");
      return v;
    }
    case Kind::real_list: {
      json arr = json::array();
      std::string_view rest = text;
      while (true) {
        const auto comma = rest.find(',');
        arr.push_back(parse_number(key, rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
      return arr;
    }
    case Kind::path:
      return text;
  }
  return text;
}

json config_to_json(const RunConfig& cfg) {
  json out = json::object();
  for (const auto& k : key_table()) out[k.name] = k.get(cfg);
  return out;
}

}  // namespace rotflow::cli
