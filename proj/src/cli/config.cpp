#include "yamabe/cli/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "yamabe/cli/format.hpp"
#include "yamabe/error.hpp"

namespace yamabe::cli {

namespace pt = boost::property_tree;

namespace {

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s = {
      {"model", {"type", "a", "n"}},
      {"grid", {"n_cells", "grading", "ratio"}},
      {"time", {"t_end", "safety", "renorm_every", "snapshot_every", "volume_target"}},
      {"init", {"type", "value", "path", "noise"}},
      {"diagnostics", {"cutoffs", "f_p_exponents"}},
      {"output", {"dir"}},
      {"yamabe", {"max_iterations", "tolerance"}},
      {"eigen", {"max_iterations", "tolerance", "sigma_inf"}},
  };
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

class Reader {
 public:
  Reader(const pt::ptree& tree, std::string source) : tree_(tree), source_(std::move(source)) {}

  std::optional<std::string> raw(const std::string& section, const std::string& key) const {
    const auto sec = tree_.get_child_optional(section);
    if (!sec) return std::nullopt;
    const auto v = sec->get_optional<std::string>(key);
    if (!v) return std::nullopt;
    return trim(*v);
  }

  double number(const std::string& section, const std::string& key, double fallback) const {
    const auto s = raw(section, key);
    return s ? parse_double(*s, section + "." + key) : fallback;
  }

  std::optional<double> optional_number(const std::string& section, const std::string& key,
                                        std::optional<double> fallback) const {
    const auto s = raw(section, key);
    if (!s) return fallback;
    if (s->empty()) return std::nullopt;
    return parse_double(*s, section + "." + key);
  }

  long long integer(const std::string& section, const std::string& key, long long fallback) const {
    const auto s = raw(section, key);
    if (!s) return fallback;
    long long out = 0;
    const auto [ptr, ec] = std::from_chars(s->data(), s->data() + s->size(), out);
    if (ec != std::errc() || ptr != s->data() + s->size() || s->empty())
      fail(section + "." + key + ": expected an integer, got '" + *s + "'");
    return out;
  }

  std::string text(const std::string& section, const std::string& key,
                   const std::string& fallback) const {
    return raw(section, key).value_or(fallback);
  }

  std::vector<double> list(const std::string& section, const std::string& key,
                           const std::vector<double>& fallback) const {
    const auto s = raw(section, key);
    if (!s) return fallback;
    std::vector<double> out;
    if (s->empty()) return out;
    std::stringstream ss(*s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(trim(item), section + "." + key));
    return out;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw InputError(source_ + ": " + msg); }

 private:
  double parse_double(const std::string& s, const std::string& what) const {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      fail(what + ": expected a number, got '" + s + "'");
    return out;
  }

  const pt::ptree& tree_;
  std::string source_;
};

std::string join(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += format_shortest(xs[i]);
  }
  return out;
}

}  // namespace

void ScenarioConfig::validate() const {
  if (model.type == variational::QuotientModel::eguchi_hanson && !(model.a > 0.0 && std::isfinite(model.a)))
    throw InputError("model.a must be positive");
  if (model.type == variational::QuotientModel::sphere && model.n < 3)
    throw InputError("model.n must be >= 3");
  if (grid.n_cells < geometry::RadialGrid::min_cells || grid.n_cells > 1u << 20)
    throw InputError("grid.n_cells must lie in [8, 2^20]");
  if (!(grid.ratio > 0.0 && grid.ratio < 1.0)) throw InputError("grid.ratio must lie in (0,1)");
  flow_config().validate();
  if (init.type != "constant" && init.type != "file")
    throw InputError("init.type must be 'constant' or 'file'");
  if (init.type == "file" && init.path.empty()) throw InputError("init.path is required for file init");
  if (!(init.noise >= 0.0 && init.noise < 1.0)) throw InputError("init.noise must lie in [0,1)");
  if (diagnostics.cutoffs.empty()) throw InputError("diagnostics.cutoffs must not be empty");
  for (double p : diagnostics.f_p_exponents)
    if (!(p >= 1.0) || !std::isfinite(p)) throw InputError("diagnostics.f_p_exponents must be >= 1");
  if (output.dir.empty()) throw InputError("output.dir must not be empty");
  if (yamabe.max_iterations < 0 || !(yamabe.tolerance >= 0.0))
    throw InputError("yamabe options out of range");
  if (eigen.max_iterations < 1 || !(eigen.tolerance > 0.0))
    throw InputError("eigen options out of range");
  if (eigen.sigma_inf && !std::isfinite(*eigen.sigma_inf))
    throw InputError("eigen.sigma_inf must be finite");
}

flow::FlowConfig ScenarioConfig::flow_config() const {
  flow::FlowConfig f;
  f.t_end = time.t_end;
  f.safety = time.safety;
  f.renorm_every = time.renorm_every;
  f.snapshot_every = time.snapshot_every;
  f.volume_target = time.volume_target;
  f.cutoffs = diagnostics.cutoffs;
  if (init.type == "file")
    f.initial_condition = flow::FileInit{init.path};
  else
    f.initial_condition = flow::ConstantInit{init.value};
  return f;
}

ScenarioConfig parse_config(std::istream& in, const std::string& source) {
  pt::ptree tree;
  try {
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw InputError(source + ": " + e.message() + " (line " + std::to_string(e.line()) + ")");
  }
  Reader r(tree, source);
  for (const auto& [section, body] : tree) {
    const auto it = schema().find(section);
    if (it == schema().end()) r.fail("unknown section or top-level key '" + section + "'");
    if (body.empty() && !body.data().empty()) r.fail("'" + section + "' must be a section");
    for (const auto& [key, value] : body)
      if (!it->second.count(key)) r.fail("unknown key '" + section + "." + key + "'");
  }

  ScenarioConfig c;
  try {
    c.model.type = variational::quotient_model_from_string(
        r.text("model", "type", variational::to_string(c.model.type)));
    c.grid.grading = geometry::grading_from_string(
        r.text("grid", "grading", geometry::to_string(c.grid.grading)));
  } catch (const InputError& e) {
    r.fail(e.what());
  }
  c.model.a = r.number("model", "a", c.model.a);
  c.model.n = static_cast<int>(r.integer("model", "n", c.model.n));
  const long long cells = r.integer("grid", "n_cells", static_cast<long long>(c.grid.n_cells));
  if (cells < 0) r.fail("grid.n_cells must be positive");
  c.grid.n_cells = static_cast<std::size_t>(cells);
  c.grid.ratio = r.number("grid", "ratio", c.grid.ratio);
  c.time.t_end = r.number("time", "t_end", c.time.t_end);
  c.time.safety = r.number("time", "safety", c.time.safety);
  c.time.renorm_every = static_cast<int>(r.integer("time", "renorm_every", c.time.renorm_every));
  c.time.snapshot_every = r.number("time", "snapshot_every", c.time.snapshot_every);
  c.time.volume_target = r.number("time", "volume_target", c.time.volume_target);
  c.init.type = r.text("init", "type", c.init.type);
  c.init.value = r.optional_number("init", "value", c.init.value);
  c.init.path = r.text("init", "path", c.init.path);
  c.init.noise = r.number("init", "noise", c.init.noise);
  c.diagnostics.cutoffs = r.list("diagnostics", "cutoffs", c.diagnostics.cutoffs);
  c.diagnostics.f_p_exponents = r.list("diagnostics", "f_p_exponents", c.diagnostics.f_p_exponents);
  c.output.dir = r.text("output", "dir", c.output.dir);
  c.yamabe.max_iterations =
      static_cast<int>(r.integer("yamabe", "max_iterations", c.yamabe.max_iterations));
  c.yamabe.tolerance = r.number("yamabe", "tolerance", c.yamabe.tolerance);
  c.eigen.max_iterations =
      static_cast<int>(r.integer("eigen", "max_iterations", c.eigen.max_iterations));
  c.eigen.tolerance = r.number("eigen", "tolerance", c.eigen.tolerance);
  c.eigen.sigma_inf = r.optional_number("eigen", "sigma_inf", c.eigen.sigma_inf);

  try {
    c.validate();
  } catch (const InputError& e) {
    r.fail(e.what());
  }
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config '" + path + "'");
  return parse_config(in, path);
}

std::string dump_config(const ScenarioConfig& c) {
  std::ostringstream o;
  o << "[model]\n"
    << "; eguchi-hanson | sphere\n"
    << "type = " << variational::to_string(c.model.type) << "\n"
    << "a = " << format_shortest(c.model.a) << "\n"
    << "n = " << c.model.n << "\n\n"
    << "[grid]\n"
    << "n_cells = " << c.grid.n_cells << "\n"
    << "; uniform | geometric\n"
    << "grading = " << geometry::to_string(c.grid.grading) << "\n"
    << "ratio = " << format_shortest(c.grid.ratio) << "\n\n"
    << "[time]\n"
    << "t_end = " << format_shortest(c.time.t_end) << "\n"
    << "safety = " << format_shortest(c.time.safety) << "\n"
    << "renorm_every = " << c.time.renorm_every << "\n"
    << "snapshot_every = " << format_shortest(c.time.snapshot_every) << "\n"
    << "volume_target = " << format_shortest(c.time.volume_target) << "\n\n"
    << "[init]\n"
    << "; constant | file\n"
    << "type = " << c.init.type << "\n"
    << "; empty value = constant with the target volume\n"
    << "value = " << (c.init.value ? format_shortest(*c.init.value) : "") << "\n"
    << "path = " << c.init.path << "\n"
    << "noise = " << format_shortest(c.init.noise) << "\n\n"
    << "[diagnostics]\n"
    << "cutoffs = " << join(c.diagnostics.cutoffs) << "\n"
    << "f_p_exponents = " << join(c.diagnostics.f_p_exponents) << "\n\n"
    << "[output]\n"
    << "dir = " << c.output.dir << "\n\n"
    << "[yamabe]\n"
    << "max_iterations = " << c.yamabe.max_iterations << "\n"
    << "tolerance = " << format_shortest(c.yamabe.tolerance) << "\n\n"
    << "[eigen]\n"
    << "max_iterations = " << c.eigen.max_iterations << "\n"
    << "tolerance = " << format_shortest(c.eigen.tolerance) << "\n"
    << "; empty = average scalar curvature of the metric\n"
    << "sigma_inf = " << (c.eigen.sigma_inf ? format_shortest(*c.eigen.sigma_inf) : "") << "\n";
  return o.str();
}

}  // namespace yamabe::cli
