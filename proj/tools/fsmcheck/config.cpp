#include "config.hpp"

#include <fstream>
#include <sstream>

namespace fsmcheck {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) out.push_back(trim(item));
  return out;
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config: '" + key + "' expects a number, got '" + v + "'");
  }
}

int to_int(const std::string& key, const std::string& v) {
  const double x = to_double(key, v);
  if (x != static_cast<int>(x)) throw ConfigError("config: '" + key + "' expects an integer, got '" + v + "'");
  return static_cast<int>(x);
}

std::vector<fsm::cplx> parse_zeros(const std::string& s) {
  std::vector<fsm::cplx> out;
  if (trim(s).empty()) return out;
  for (const auto& item : split(s, ';')) {
    const auto parts = split(item, ',');
    if (parts.size() != 2) throw ConfigError("config: zero '" + item + "' must be 're,im'");
    out.emplace_back(to_double("zeros", parts[0]), to_double("zeros", parts[1]));
  }
  return out;
}

// sinhgordon:<g> | const:<+1|-1> | rational:<eps>:<a>:<re,im;...>
fsm::ScalarFunction parse_sigma(const std::string& key, const std::string& v) {
  const auto parts = split(v, ':');
  if (parts.size() == 2 && parts[0] == "sinhgordon") {
    const double sb = std::sin(fsm::sinh_gordon_b(to_double(key, parts[1])));
    return [sb](fsm::cplx t) { return (std::sinh(t) - fsm::kI * sb) / (std::sinh(t) + fsm::kI * sb); };
  }
  if (parts.size() == 2 && parts[0] == "const") {
    const double c = to_double(key, parts[1]);
    return [c](fsm::cplx) { return fsm::cplx(c); };
  }
  if ((parts.size() == 3 || parts.size() == 4) && parts[0] == "rational") {
    const int eps = to_int(key, parts[1]);
    const double a = to_double(key, parts[2]);
    const auto zeros = parse_zeros(parts.size() == 4 ? parts[3] : "");
    return [eps, a, zeros](fsm::cplx t) { return fsm::scalar_rational_value(eps, a, zeros, t); };
  }
  throw ConfigError("config: cannot parse '" + key + " = " + v + "'");
}

}  // namespace

void RunConfig::validate() const {
  for (const auto& [k, v] : tol)
    if (!(v > 0.0)) throw ConfigError("config: tolerance '" + k + "' must be > 0");
  if (nodes < 4) throw ConfigError("config: nodes must be >= 4");
  if (nmax < 2 || nmax > 6) throw ConfigError("config: nmax must be in 2..6");
  if (samples < 1) throw ConfigError("config: samples must be >= 1");
  if (states < 1) throw ConfigError("config: states must be >= 1");
  if (!(theta_max > 0.0)) throw ConfigError("config: theta_max must be > 0");
}

std::map<std::string, std::string> read_key_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: line " + std::to_string(lineno) + " of '" + path + "' has no '='");
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

void apply_key_values(RunConfig& cfg, const std::map<std::string, std::string>& kv) {
  for (const auto& [k, v] : kv) {
    if (k == "model") cfg.model = v;
    else if (k == "N") cfg.n = to_int(k, v);
    else if (k == "epsilon") cfg.epsilon = to_int(k, v);
    else if (k == "g") cfg.g = to_double(k, v);
    else if (k == "a") cfg.a = to_double(k, v);
    else if (k == "zeros") cfg.zeros = v;
    else if (k == "theta_max") cfg.theta_max = to_double(k, v);
    else if (k == "nodes") cfg.nodes = to_int(k, v);
    else if (k == "nmax") cfg.nmax = to_int(k, v);
    else if (k == "samples") cfg.samples = to_int(k, v);
    else if (k == "states") cfg.states = to_int(k, v);
    else if (k == "seed") cfg.seed = static_cast<std::uint64_t>(to_int(k, v));
    else if (k.rfind("tol.", 0) == 0) {
      const std::string fam = k.substr(4);
      if (!cfg.tol.count(fam)) throw ConfigError("config: unknown tolerance family '" + fam + "'");
      cfg.tol[fam] = to_double(k, v);
    } else if (k == "dim" || k == "masses" || k == "conjugation" || k.rfind("sigma.", 0) == 0 ||
               k.rfind("wedge.", 0) == 0)
      cfg.extra[k] = v;
    else
      throw ConfigError("config: unknown key '" + k + "'");
  }
}

fsm::ModelPtr build_model(const RunConfig& cfg) {
  try {
    if (cfg.model == "constant") return fsm::make_constant(cfg.epsilon);
    if (cfg.model == "sinhgordon") return fsm::make_sinh_gordon(cfg.g);
    if (cfg.model == "rational") return fsm::make_scalar_rational(cfg.epsilon, cfg.a, parse_zeros(cfg.zeros));
    if (cfg.model == "onsigma") return fsm::make_on_sigma(cfg.n);
  } catch (const fsm::DiagonalViolation&) {
    throw;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (cfg.model != "diagonal") throw ConfigError("config: unknown model '" + cfg.model + "'");

  auto get = [&](const std::string& k) -> const std::string* {
    auto it = cfg.extra.find(k);
    return it == cfg.extra.end() ? nullptr : &it->second;
  };
  const std::string* dim_s = get("dim");
  if (!dim_s) throw ConfigError("config: diagonal model needs 'dim'");
  const int d = to_int("dim", *dim_s);
  if (d < 1 || d > 8) throw ConfigError("config: dim must be in 1..8");
  fsm::ParticleSpectrum sp = fsm::ParticleSpectrum::uniform(d);
  if (const auto* m = get("masses")) {
    const auto parts = split(*m, ',');
    if (static_cast<int>(parts.size()) != d) throw ConfigError("config: masses needs dim entries");
    for (int a = 0; a < d; ++a) sp.masses[a] = to_double("masses", parts[a]);
  }
  if (const auto* c = get("conjugation")) {
    const auto parts = split(*c, ',');
    if (static_cast<int>(parts.size()) != d) throw ConfigError("config: conjugation needs dim entries");
    for (int a = 0; a < d; ++a) sp.conjugation[a] = to_int("conjugation", parts[a]) - 1;
  }
  std::vector<std::vector<fsm::ScalarFunction>> sigma(d, std::vector<fsm::ScalarFunction>(d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const std::string key = "sigma." + std::to_string(a + 1) + "." + std::to_string(b + 1);
      const auto* v = get(key);
      if (!v) throw ConfigError("config: diagonal model needs '" + key + "'");
      sigma[a][b] = parse_sigma(key, *v);
    }
  try {
    sp.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return fsm::make_diagonal(sp, sigma);
}

}  // namespace fsmcheck
