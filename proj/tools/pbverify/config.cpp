#include "pbverify/config.hpp"

#include <charconv>
#include <cmath>
#include <set>

#include <json.hpp>

#include "pseudoboson/fock.hpp"

namespace pbverify {

using nlohmann::json;
using pseudoboson::Family;

std::string_view to_string(Suite suite) noexcept {
  switch (suite) {
    case Suite::Gram: return "gram";
    case Suite::Riesz: return "riesz";
    case Suite::Expand: return "expand";
    case Suite::Coherent: return "coherent";
    case Suite::Fock: return "fock";
  }
  return "unknown";
}

std::optional<Suite> suite_from_string(std::string_view name) noexcept {
  for (Suite s : all_suites())
    if (to_string(s) == name) return s;
  return std::nullopt;
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites{Suite::Gram, Suite::Riesz, Suite::Expand, Suite::Coherent,
                                         Suite::Fock};
  return suites;
}

pseudoboson::FamilyParams RunConfig::family_params() const {
  pseudoboson::FamilyParams p;
  p.beta = beta;
  if (family == Family::BoundedPhi) p.phi = pseudoboson::bounded_function_from_string(phi);
  return p;
}

namespace {

std::optional<double> parse_real(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// Coefficient of a bare "i": "", "+" and "-" stand for +1 and -1.
std::optional<double> parse_imag_coeff(std::string_view s) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  return parse_real(s);
}

}  // namespace

std::optional<cplx> parse_complex(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  if (s.empty()) return std::nullopt;
  if (s.back() != 'i' && s.back() != 'j') {
    const auto re = parse_real(s);
    if (!re) return std::nullopt;
    return cplx(*re, 0.0);
  }
  s.pop_back();
  // Split at the last sign that is not a leading sign or part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) {
    const auto im = parse_imag_coeff(s);
    if (!im) return std::nullopt;
    return cplx(0.0, *im);
  }
  const auto re = parse_real(std::string_view(s).substr(0, split));
  const auto im = parse_imag_coeff(std::string_view(s).substr(split));
  if (!re || !im) return std::nullopt;
  return cplx(*re, *im);
}

std::string format_complex(cplx value) {
  json re = value.real();
  json im = std::abs(value.imag());
  std::string out = re.dump();
  out += value.imag() < 0 ? "-" : "+";
  out += im.dump();
  out += "i";
  return out;
}

namespace {

std::string join(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& prefix) {
  for (const auto& item : obj.items())
    if (!known.count(item.key())) throw ConfigError(join(prefix, item.key()), "unknown key");
}

const json* find(const json& obj, const char* key) {
  const auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

double get_number(const json& v, const std::string& path) {
  if (!v.is_number()) throw ConfigError(path, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ConfigError(path, "must be finite");
  return d;
}

int get_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ConfigError(path, "expected an integer");
  return v.get<int>();
}

cplx get_complex(const json& v, const std::string& path) {
  if (v.is_number()) return cplx(get_number(v, path), 0.0);
  if (v.is_string()) {
    const auto c = parse_complex(v.get<std::string>());
    if (!c || !std::isfinite(c->real()) || !std::isfinite(c->imag()))
      throw ConfigError(path, "cannot parse complex number '" + v.get<std::string>() + "'");
    return *c;
  }
  throw ConfigError(path, "expected a number or a complex string such as \"1+0.3i\"");
}

std::string get_string(const json& v, const std::string& path) {
  if (!v.is_string()) throw ConfigError(path, "expected a string");
  return v.get<std::string>();
}

const json& get_object(const json& v, const std::string& path) {
  if (!v.is_object()) throw ConfigError(path, "expected an object");
  return v;
}

void require(bool ok, const std::string& path, const std::string& message) {
  if (!ok) throw ConfigError(path, message);
}

}  // namespace

RunConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError("$", std::string("malformed JSON: ") + e.what());
  }
  get_object(doc, "$");
  reject_unknown(doc,
                 {"family", "alpha", "beta", "phi", "n_max", "grid", "disk", "suites", "fock",
                  "target", "out"},
                 "");

  RunConfig c;
  if (const auto* v = find(doc, "family")) {
    const auto name = get_string(*v, "family");
    const auto family = pseudoboson::family_from_string(name);
    require(family.has_value(), "family", "unknown family '" + name + "'");
    c.family = *family;
  } else {
    throw ConfigError("family", "required key is missing");
  }
  if (const auto* v = find(doc, "alpha")) c.alpha = get_complex(*v, "alpha");
  if (const auto* v = find(doc, "beta")) c.beta = get_complex(*v, "beta");
  if (const auto* v = find(doc, "phi")) {
    c.phi = get_string(*v, "phi");
    require(c.family == Family::BoundedPhi, "phi", "only valid for the bounded_phi family");
    require(pseudoboson::bounded_function_from_string(c.phi).has_value(), "phi",
            "unknown bounded function '" + c.phi + "'");
  }
  if (const auto* v = find(doc, "n_max")) {
    c.n_max = get_int(*v, "n_max");
    require(c.n_max >= 0 && c.n_max <= 40, "n_max", "must lie in [0, 40]");
  }
  if (const auto* v = find(doc, "grid")) {
    const auto& g = get_object(*v, "grid");
    reject_unknown(g, {"L", "density"}, "grid");
    if (const auto* w = find(g, "L")) {
      c.grid.L = get_number(*w, "grid.L");
      require(c.grid.L >= 5.0, "grid.L", "must be at least 5");
    }
    if (const auto* w = find(g, "density")) {
      c.grid.density = get_int(*w, "grid.density");
      require(c.grid.density >= 16, "grid.density", "must be at least 16");
    }
  }
  if (const auto* v = find(doc, "disk")) {
    const auto& d = get_object(*v, "disk");
    reject_unknown(d, {"R", "radial", "angular"}, "disk");
    if (const auto* w = find(d, "R")) {
      c.disk.R = get_number(*w, "disk.R");
      require(c.disk.R >= 3.0, "disk.R", "must be at least 3");
    }
    if (const auto* w = find(d, "radial")) {
      c.disk.radial = get_int(*w, "disk.radial");
      require(c.disk.radial >= 40, "disk.radial", "must be at least 40");
    }
    if (const auto* w = find(d, "angular")) {
      c.disk.angular = get_int(*w, "disk.angular");
      require(c.disk.angular >= 64, "disk.angular", "must be at least 64");
    }
  }
  if (const auto* v = find(doc, "suites")) {
    require(v->is_array(), "suites", "expected an array of suite names");
    std::set<Suite> chosen;
    for (std::size_t k = 0; k < v->size(); ++k) {
      const std::string path = "suites[" + std::to_string(k) + "]";
      const auto name = get_string((*v)[k], path);
      const auto suite = suite_from_string(name);
      require(suite.has_value(), path, "unknown suite '" + name + "'");
      chosen.insert(*suite);
    }
    c.suites.clear();
    for (Suite s : all_suites())
      if (chosen.count(s)) c.suites.push_back(s);
  }
  if (const auto* v = find(doc, "fock")) {
    const auto& f = get_object(*v, "fock");
    reject_unknown(f, {"alpha", "beta", "dim", "n_max"}, "fock");
    if (const auto* w = find(f, "alpha")) c.fock.alpha = get_complex(*w, "fock.alpha");
    if (const auto* w = find(f, "beta")) c.fock.beta = get_complex(*w, "fock.beta");
    if (const auto* w = find(f, "dim")) {
      c.fock.dim = get_int(*w, "fock.dim");
      require(c.fock.dim >= 16 && c.fock.dim <= 512, "fock.dim", "must lie in [16, 512]");
    }
    if (const auto* w = find(f, "n_max")) {
      c.fock.n_max = get_int(*w, "fock.n_max");
      require(c.fock.n_max >= 0, "fock.n_max", "must be nonnegative");
    }
  }
  require(2 * c.fock.n_max <= c.fock.dim, "fock.n_max", "must not exceed fock.dim / 2");
  require(c.fock.dim >= pseudoboson::minimum_dimension(c.fock.alpha, c.fock.beta), "fock.dim",
          "below the guard 16 + 10 max(|alpha|, |beta|)^2");
  if (const auto* v = find(doc, "target")) {
    const auto& t = get_object(*v, "target");
    reject_unknown(t, {"center", "width"}, "target");
    if (const auto* w = find(t, "center")) c.target.center = get_number(*w, "target.center");
    if (const auto* w = find(t, "width")) {
      c.target.width = get_number(*w, "target.width");
      require(c.target.width > 0.0, "target.width", "must be positive");
    }
  }
  if (const auto* v = find(doc, "out")) c.out_dir = get_string(*v, "out");

  try {
    pseudoboson::make_system(c.family, c.alpha, c.family_params());
  } catch (const pseudoboson::ParameterError& e) {
    throw ConfigError("family", e.what());
  }
  return c;
}

std::string config_to_json(const RunConfig& c) {
  json j;
  j["family"] = std::string(pseudoboson::to_string(c.family));
  j["alpha"] = format_complex(c.alpha);
  j["beta"] = format_complex(c.beta);
  if (c.family == Family::BoundedPhi) j["phi"] = c.phi;
  j["n_max"] = c.n_max;
  j["grid"] = {{"L", c.grid.L}, {"density", c.grid.density}};
  j["disk"] = {{"R", c.disk.R}, {"radial", c.disk.radial}, {"angular", c.disk.angular}};
  json suites = json::array();
  for (Suite s : c.suites) suites.push_back(std::string(to_string(s)));
  j["suites"] = suites;
  j["fock"] = {{"alpha", format_complex(c.fock.alpha)},
               {"beta", format_complex(c.fock.beta)},
               {"dim", c.fock.dim},
               {"n_max", c.fock.n_max}};
  j["target"] = {{"center", c.target.center}, {"width", c.target.width}};
  return j.dump();
}

}  // namespace pbverify
