#include <bit>
#include <cstring>
#include <istream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "fsm/fock.hpp"

namespace fsm {

namespace {

constexpr char kMagic[8] = {'F', 'S', 'M', 'S', 'T', 'A', 'T', '1'};

void check_shape(const FockSpace& space, long m, long d, long n_max) {
  if (m != space.grid_size() || d != space.dim() || n_max != space.n_max())
    throw MismatchError("fock state: stored shape does not match the target space");
}

template <typename T>
void put(std::ostream& os, T v) {
  static_assert(std::endian::native == std::endian::little, "binary format assumes a little-endian host");
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!is) throw std::runtime_error("fock state: truncated binary stream");
  return v;
}

}  // namespace

std::string to_json(const FockState& psi) {
  const FockSpace& space = *psi.space();
  nlohmann::json j;
  j["format"] = "fsm-fock-state";
  j["version"] = 1;
  j["grid_size"] = space.grid_size();
  j["dim"] = space.dim();
  j["n_max"] = space.n_max();
  j["theta_max"] = space.quadrature().theta_max;
  nlohmann::json levels = nlohmann::json::array();
  for (int n = 0; n <= psi.n_max(); ++n) {
    nlohmann::json l;
    l["n"] = n;
    l["zero"] = psi.is_zero(n);
    nlohmann::json e = nlohmann::json::array();
    for (const cplx& v : psi.level(n)) e.push_back({v.real(), v.imag()});
    l["entries"] = std::move(e);
    levels.push_back(std::move(l));
  }
  j["levels"] = std::move(levels);
  return j.dump();
}

FockState from_json(FockSpacePtr space, const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("format") != "fsm-fock-state" || j.at("version") != 1)
    throw std::runtime_error("fock state: unknown JSON format");
  check_shape(*space, j.at("grid_size"), j.at("dim"), j.at("n_max"));
  FockState psi(space);
  for (const auto& l : j.at("levels")) {
    const int n = l.at("n");
    if (l.at("zero").get<bool>()) continue;
    Level data;
    data.reserve(l.at("entries").size());
    for (const auto& e : l.at("entries")) data.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
    psi.set_level(n, std::move(data));
  }
  return psi;
}

void write_binary(std::ostream& os, const FockState& psi) {
  const FockSpace& space = *psi.space();
  os.write(kMagic, sizeof kMagic);
  put<std::uint32_t>(os, static_cast<std::uint32_t>(space.grid_size()));
  put<std::uint32_t>(os, static_cast<std::uint32_t>(space.dim()));
  put<std::uint32_t>(os, static_cast<std::uint32_t>(space.n_max()));
  put<double>(os, space.quadrature().theta_max);
  for (int n = 0; n <= psi.n_max(); ++n) {
    put<std::uint8_t>(os, psi.is_zero(n) ? 0 : 1);
    for (const cplx& v : psi.level(n)) {
      put<double>(os, v.real());
      put<double>(os, v.imag());
    }
  }
}

FockState read_binary(FockSpacePtr space, std::istream& is) {
  char magic[8];
  is.read(magic, sizeof magic);
  if (!is || std::memcmp(magic, kMagic, sizeof magic) != 0) throw std::runtime_error("fock state: bad magic");
  const auto m = get<std::uint32_t>(is);
  const auto d = get<std::uint32_t>(is);
  const auto n_max = get<std::uint32_t>(is);
  (void)get<double>(is);
  check_shape(*space, m, d, n_max);
  FockState psi(space);
  for (int n = 0; n <= psi.n_max(); ++n) {
    if (get<std::uint8_t>(is) == 0) continue;
    Level data(space->level_size(n));
    for (auto& v : data) {
      const double re = get<double>(is);
      const double im = get<double>(is);
      v = {re, im};
    }
    psi.set_level(n, std::move(data));
  }
  return psi;
}

}  // namespace fsm
