#include "gks3d/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace gks {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

struct Parser {
  RunConfig cfg;
  std::set<std::string> seen;
  int line = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ConfigError(line, msg); }

  double num(const std::string& v) const {
    std::size_t pos = 0;
    double d;
    try {
      d = std::stod(v, &pos);
    } catch (const std::exception&) {
      fail("not a number: '" + v + "'");
    }
    if (pos != v.size()) fail("trailing characters in number: '" + v + "'");
    return d;
  }
  int integer(const std::string& v) const {
    const double d = num(v);
    if (d != double(long(d))) fail("expected an integer, got '" + v + "'");
    return int(d);
  }
  int cells(const std::string& v) const {
    const int n = integer(v);
    if (n <= 0) fail("cell count must be positive, got '" + v + "'");
    return n;
  }
  bool boolean(const std::string& v) const {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    fail("expected a boolean, got '" + v + "'");
  }

  void key(const std::string& k, const std::string& v) {
    RunConfig& c = cfg;
    CaseParams& p = c.params;
    if (k == "case") {
      c.case_id = v;
      static const char* known[] = {"sod3d", "rayleigh_taylor", "cavity", "hit", "tgv"};
      for (const char* id : known)
        if (v == id) return;
      fail("unknown case id '" + v + "'");
    } else if (k == "gamma") {
      p.gamma = num(v);
      if (p.gamma <= 1.0 || p.gamma > 5.0 / 3.0 + 1e-12) fail("gamma out of range (1, 5/3]");
    } else if (k == "prandtl") {
      p.prandtl = num(v);
      if (p.prandtl <= 0.0) fail("prandtl must be positive");
    } else if (k == "re") {
      p.reynolds = num(v);
      if (p.reynolds <= 0.0) fail("re must be positive");
    } else if (k == "mach") {
      p.mach = num(v);
    } else if (k == "lid_mach") {
      p.lid_mach = num(v);
    } else if (k == "wall_temperature") {
      p.wall_temperature = num(v);
      if (p.wall_temperature <= 0.0) fail("wall_temperature must be positive");
    } else if (k == "atwood") {
      p.atwood = num(v);
      if (p.atwood <= 0.0 || p.atwood >= 1.0) fail("atwood must be in (0, 1)");
    } else if (k == "interface_pressure") {
      p.interface_pressure = num(v);
    } else if (k == "gravity_z") {
      p.gravity_z = num(v);
    } else if (k == "ramp_cells") {
      p.ramp_cells = num(v);
    } else if (k == "perturb_amp") {
      p.perturb_amp = num(v);
    } else if (k == "a0") {
      p.hit_a0 = num(v);
    } else if (k == "k0") {
      p.hit_k0 = num(v);
    } else if (k == "re_lambda") {
      p.hit_re_lambda = num(v);
    } else if (k == "ma_t") {
      p.hit_ma_t = num(v);
    } else if (k == "seed") {
      p.seed = std::uint64_t(num(v));
    } else if (k == "n") {
      c.nx = c.ny = c.nz = cells(v);
    } else if (k == "nx") {
      c.nx = cells(v);
    } else if (k == "ny") {
      c.ny = cells(v);
    } else if (k == "nz") {
      c.nz = cells(v);
    } else if (k == "cfl") {
      c.cfl = num(v);
      if (c.cfl <= 0.0 || c.cfl >= 1.0) fail("cfl must be in (0, 1)");
    } else if (k == "t_end") {
      c.t_end = num(v);
      if (c.t_end <= 0.0) fail("t_end must be positive");
    } else if (k == "mode") {
      if (v == "weno5_js")
        c.mode = ReconMode::weno5_js;
      else if (v == "linear5")
        c.mode = ReconMode::linear5;
      else
        fail("mode must be weno5_js or linear5");
      c.mode_set = true;
    } else if (k == "projection") {
      if (v == "component")
        c.projection = Projection::component;
      else if (v == "characteristic")
        c.projection = Projection::characteristic;
      else
        fail("projection must be component or characteristic");
      c.projection_set = true;
    } else if (k == "epsilon") {
      c.weno_epsilon = num(v);
      if (c.weno_epsilon <= 0.0) fail("epsilon must be positive");
    } else if (k == "positivity_fallback") {
      c.positivity_fallback = boolean(v);
    } else if (k == "output_dir") {
      c.output_dir = v;
    } else if (k == "diag_every") {
      c.diag_every = integer(v);
      if (c.diag_every <= 0) fail("diag_every must be positive");
    } else if (k == "field_interval") {
      c.field_interval = num(v);
      if (c.field_interval < 0.0) fail("field_interval must be non-negative");
    } else if (k == "checkpoint_every") {
      c.checkpoint_every = integer(v);
      if (c.checkpoint_every < 0) fail("checkpoint_every must be non-negative");
    } else if (k == "restart") {
      c.restart_from = v;
    } else if (k == "threads") {
      c.threads = integer(v);
      if (c.threads < 0) fail("threads must be non-negative");
    } else {
      fail("unknown key '" + k + "'");
    }
  }
};

}  // namespace

RunConfig parse_config(const std::string& text) {
  Parser p;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++p.line;
    std::string s = trim(raw);
    const auto hash = s.find('#');
    if (hash != std::string::npos) s = trim(s.substr(0, hash));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') p.fail("unterminated section header");
      continue;  // sections are organizational only
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) p.fail("expected key = value");
    const std::string k = trim(s.substr(0, eq));
    const std::string v = trim(s.substr(eq + 1));
    if (k.empty()) p.fail("empty key");
    if (v.empty()) p.fail("empty value for '" + k + "'");
    if (!p.seen.insert(k).second) p.fail("duplicate key '" + k + "'");
    p.key(k, v);
  }
  p.line = 0;
  if (p.cfg.case_id.empty()) p.fail("missing required key 'case'");
  // defaults tied to the case: discontinuous problems reconstruct in
  // characteristic variables unless overridden
  if (!p.cfg.projection_set)
    p.cfg.projection = (p.cfg.case_id == "sod3d" || p.cfg.case_id == "rayleigh_taylor")
                           ? Projection::characteristic
                           : Projection::component;
  return p.cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace gks
