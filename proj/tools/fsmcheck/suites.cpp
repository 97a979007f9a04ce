#include "suites.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "fsm/scattering.hpp"

namespace fsmcheck {

using namespace fsm;
using nlohmann::json;

namespace {

// Each suite draws from its own stream so suites can be run separately.
std::mt19937_64 stream(const RunConfig& cfg, std::uint64_t salt) { return std::mt19937_64(cfg.seed * 1000003u + salt); }

std::vector<double> parse_list(const RunConfig& cfg, const std::string& key, std::vector<double> fallback) {
  auto it = cfg.extra.find(key);
  if (it == cfg.extra.end()) return fallback;
  std::vector<double> out;
  std::istringstream is(it->second);
  std::string item;
  while (std::getline(is, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ConfigError("config: '" + key + "' expects comma-separated numbers");
    }
  }
  if (out.size() != fallback.size())
    throw ConfigError("config: '" + key + "' expects " + std::to_string(fallback.size()) + " numbers");
  return out;
}

double relative_residual(const FockState& a, const FockState& b) {
  const double n = std::max(norm(b), 1e-300);
  return norm_diff(a, b) / n;
}

Level random_level(const FockSpace& space, int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Level x(space.level_size(n));
  for (auto& v : x) v = cplx(g(rng), g(rng));
  return x;
}

double level_norm(const FockSpace& space, const Level& a, int n) { return std::sqrt(std::abs(level_inner(space, a, a, n))); }

double level_dist(const FockSpace& space, const Level& a, const Level& b, int n) {
  Level d = a;
  for (std::size_t t = 0; t < d.size(); ++t) d[t] -= b[t];
  return level_norm(space, d, n);
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

CVector unit_weights(int d) { return CVector(d, cplx(1.0)); }

CVector random_weights(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CVector w(d);
  for (auto& x : w) x = cplx(g(rng), g(rng));
  return w;
}

CVector normalized_one_particle(const FockSpace& space, std::mt19937_64& rng) {
  CVector v = random_one_particle(space, rng);
  const double n = one_norm(space, v);
  for (auto& x : v) x /= n;
  return v;
}

bool free_bose(const SMatrixModel& m) {
  return m.kind() == ModelKind::Constant && std::abs(m.evaluate(0.3)(0, 0, 0, 0) - 1.0) < 1e-15;
}

}  // namespace

// ---- axioms ---------------------------------------------------------------

void run_axioms(const RunConfig& cfg, const ModelPtr& model, CheckReport& rep) {
  const double tol = cfg.tol.at("axioms");
  const SMatrixModel& m = *model;
  auto rng = stream(cfg, 1);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::vector<double> th(cfg.samples), th2(cfg.samples);
  for (int k = 0; k < cfg.samples; ++k) {
    th[k] = u(rng);
    th2[k] = u(rng);
  }

  auto worst_over = [&](const std::function<double(int)>& f) {
    return [&, f](json& p) {
      double worst = 0.0, at = 0.0;
      for (int k = 0; k < cfg.samples; ++k) {
        const double r = f(k);
        if (!(r <= worst)) {
          worst = r;
          at = th[k];
        }
      }
      p["samples"] = cfg.samples;
      p["worst_theta"] = at;
      return worst;
    };
  };

  rep.run("axioms", "unitarity", "S(theta)^dagger S(theta) = 1", tol,
          worst_over([&](int k) { return check_unitarity(m, th[k]); }));
  rep.run("axioms", "hermitian_analyticity", "S(-theta) = S(theta)^-1", tol,
          worst_over([&](int k) { return check_hermitian_analyticity(m, th[k]); }));
  rep.run("axioms", "yang_baxter", "Yang-Baxter equation", tol, [&](json& p) {
    double worst = 0.0;
    std::array<double, 2> at{0.0, 0.0};
    for (int k = 0; k < cfg.samples; ++k) {
      const double r = check_yang_baxter(m, th[k], th2[k]);
      if (!(r <= worst)) {
        worst = r;
        at = {th[k], th2[k]};
      }
    }
    p["samples"] = cfg.samples;
    p["worst_theta"] = at;
    return worst;
  });
  rep.run("axioms", "translation_invariance", "S vanishes between unequal masses", tol, [&](json& p) {
    const TranslationResult r = check_translation_invariance(m, cfg.samples, cfg.seed);
    p["samples"] = cfg.samples;
    p["worst_theta"] = r.theta;
    return r.worst;
  });
  rep.run("axioms", "tcp_invariance", "S^{ab}_{cd} = S^{ba}_{dc}", tol,
          worst_over([&](int k) { return check_tcp(m, th[k]); }));
  rep.run("axioms", "gauge_invariance", "[S(theta), V (x) V] = 0", tol,
          worst_over([&](int k) { return check_gauge_invariance(m, th[k]); }));
  rep.run("axioms", "crossing", "S(i pi - theta) is S(theta) with crossed indices", tol,
          worst_over([&](int k) { return check_crossing(m, th[k]); }));
}

// ---- Fock space representation --------------------------------------------

void run_fock(const RunConfig& cfg, const ModelPtr& model, CheckReport& rep) {
  const double tol = cfg.tol.at("fock");
  const int top = std::min(cfg.nmax, 4);
  const auto space = make_fock_space(model, cfg.nodes, cfg.theta_max, top);
  const FockSpace& sp = *space;
  auto rng = stream(cfg, 2);
  const json base{{"nodes", cfg.nodes}, {"theta_max", cfg.theta_max}, {"n_max", top}};

  rep.run("fock", "representation_homomorphism", "D_n(pi rho) = D_n(pi) D_n(rho)", tol, [&](json& p) {
    p = base;
    double worst = 0.0;
    for (int n = 2; n <= top; ++n) {
      const Level x = random_level(sp, n, rng);
      for (int t = 0; t < 4; ++t) {
        const Permutation a = random_permutation(n, rng), b = random_permutation(n, rng);
        const Level lhs = apply_permutation(sp, x, n, compose(a, b));
        const Level rhs = apply_permutation(sp, apply_permutation(sp, x, n, b), n, a);
        worst = std::max(worst, level_dist(sp, lhs, rhs, n) / level_norm(sp, x, n));
      }
    }
    return worst;
  });
  rep.run("fock", "representation_unitarity", "D_n(pi) is unitary", tol, [&](json& p) {
    p = base;
    double worst = 0.0;
    for (int n = 2; n <= top; ++n) {
      const Level x = random_level(sp, n, rng), z = random_level(sp, n, rng);
      const Permutation a = random_permutation(n, rng);
      const cplx l = level_inner(sp, apply_permutation(sp, x, n, a), apply_permutation(sp, z, n, a), n);
      worst = std::max(worst, std::abs(l - level_inner(sp, x, z, n)) / (level_norm(sp, x, n) * level_norm(sp, z, n)));
    }
    return worst;
  });
  rep.run("fock", "sigma_k_closed_form", "S^{sigma_k} as a product of two-particle factors", 0.1 * tol,
          [&](json& p) {
            std::uniform_real_distribution<double> u(-cfg.theta_max, cfg.theta_max);
            double worst = 0.0;
            for (int n = 2; n <= 4; ++n) {
              std::vector<double> th(n);
              for (auto& t : th) t = u(rng);
              for (int k = 1; k <= n; ++k) {
                const Mat a = sigma_k_tensor(*model, k, th);
                const Mat b = permutation_tensor(*model, sigma_k(n, k), th);
                worst = std::max(worst, (a - b).cwiseAbs().maxCoeff());
              }
            }
            p["n"] = json::array({2, 3, 4});
            return worst;
          });
  rep.run("fock", "projector_idempotent", "P_n^2 = P_n", tol, [&](json& p) {
    p = base;
    double worst = 0.0;
    for (int n = 1; n <= top; ++n) {
      const Level x = random_level(sp, n, rng);
      const Level px = symmetrize(sp, x, n);
      worst = std::max(worst, level_dist(sp, symmetrize(sp, px, n), px, n) / level_norm(sp, x, n));
    }
    return worst;
  });
  rep.run("fock", "projector_self_adjoint", "P_n^dagger = P_n", tol, [&](json& p) {
    p = base;
    double worst = 0.0;
    for (int n = 1; n <= top; ++n) {
      const Level x = random_level(sp, n, rng), z = random_level(sp, n, rng);
      const cplx a = level_inner(sp, symmetrize(sp, x, n), z, n), b = level_inner(sp, x, symmetrize(sp, z, n), n);
      worst = std::max(worst, std::abs(a - b) / (level_norm(sp, x, n) * level_norm(sp, z, n)));
    }
    return worst;
  });
  rep.run("fock", "projector_range_invariant", "D_n(pi) P_n = P_n", tol, [&](json& p) {
    p = base;
    double worst = 0.0;
    for (int n = 2; n <= top; ++n) worst = std::max(worst, symmetry_defect(sp, symmetrize(sp, random_level(sp, n, rng), n), n));
    return worst;
  });
  rep.run("fock", "translation_commutes", "U(a) preserves S-symmetry", tol, [&](json& p) {
    p = base;
    const FockState psi = random_state(space, rng, top);
    return symmetry_defect(translate(psi, {0.7, -0.4}));
  });
}

// ---- Zamolodchikov-Faddeev algebra ----------------------------------------

void run_zf(const RunConfig& cfg, const ModelPtr& model, CheckReport& rep) {
  const double tol = cfg.tol.at("zf");
  const int top = std::min(cfg.nmax, 5);
  if (top < 3) throw ConfigError("config: the zf suite needs nmax >= 3");
  const auto space = make_fock_space(model, cfg.nodes, cfg.theta_max, top);
  const FockSpace& sp = *space;
  auto rng = stream(cfg, 3);
  const json base{{"nodes", cfg.nodes}, {"theta_max", cfg.theta_max}, {"n_max", top}, {"states", cfg.states}};

  struct Sample {
    CVector p1, p2;
    FockState psi, chi;
  };
  std::vector<Sample> samples;
  for (int k = 0; k < cfg.states; ++k) {
    CVector p1 = normalized_one_particle(sp, rng), p2 = normalized_one_particle(sp, rng);
    FockState psi = random_state(space, rng, top - 2);
    FockState chi = random_state(space, rng, top - 1);
    samples.push_back({std::move(p1), std::move(p2), std::move(psi), std::move(chi)});
  }
  auto worst = [&](const std::function<double(const Sample&)>& f) {
    return [&, f](json& p) {
      p = base;
      double w = 0.0;
      for (const auto& s : samples) w = std::max(w, f(s));
      return w;
    };
  };

  rep.run("zf", "annihilator_adjoint", "z(phi) is the adjoint of z^dagger(phi)", tol, worst([](const Sample& s) {
            return std::abs(inner_product(annihilate(s.p1, s.chi), s.psi) - inner_product(s.chi, create(s.p1, s.psi)));
          }));
  rep.run("zf", "reflected_adjoint", "z'(phi) is the adjoint of z^dagger'(phi)", tol, worst([](const Sample& s) {
            return std::abs(inner_product(annihilate_reflected(s.p1, s.chi), s.psi) -
                            inner_product(s.chi, create_reflected(s.p1, s.psi)));
          }));
  rep.run("zf", "number_bounds", "|z(phi) psi| <= |N^1/2 psi|, |z^dagger(phi) psi| <= |(N+1)^1/2 psi|", tol,
          worst([](const Sample& s) {
            const double a = norm(annihilate(s.p1, s.psi)) - number_norm(s.psi);
            const double b = norm(create(s.p1, s.psi)) - number_norm(s.psi, 1);
            return std::max({a, b, 0.0});
          }));
  for (Relation r : all_relations()) {
    const std::string name = relation_name(r);
    const bool mixed = name.rfind("mixed", 0) == 0;
    rep.run("zf", "relation_" + name,
            mixed ? "mixed commutators act by multiplication with the K and L tensors"
                  : "Zamolodchikov-Faddeev exchange relation",
            tol, worst([r](const Sample& s) { return commutator_defect(r, s.p1, s.p2, s.psi); }));
  }
  rep.run("zf", "mixed_scalar_case", "K_0 is the one-particle scalar product", 0.1 * tol, worst([&](const Sample& s) {
            const Mat k0 = mixed_k_tensor(*model, sp.quadrature(), s.p1, s.p2, {});
            return std::abs(k0(0, 0) - one_inner(sp, s.p1, s.p2));
          }));
}

// ---- wedge locality -------------------------------------------------------

void run_locality(const RunConfig& cfg, const ModelPtr& model, CheckReport& rep) {
  const double tol = cfg.tol.at("locality");
  const int d = model->dim();
  const auto fb = parse_list(cfg, "wedge.f", {0.805, 2.343, 0.652, 2.271});
  const auto gb = parse_list(cfg, "wedge.g", {-2.288, -0.696, 2.17, 0.642});
  const auto nb = parse_list(cfg, "wedge.control", {1.7, 1.1, 0.6, 0.8});
  const double wedge_theta = parse_list(cfg, "wedge.theta_max", {4.4})[0];
  const auto f = TestFunction::wedge({fb[0], fb[1], fb[2], fb[3]}, unit_weights(d));
  const auto g = TestFunction::wedge({gb[0], gb[1], gb[2], gb[3]}, unit_weights(d));
  const auto space = make_fock_space(model, 6, wedge_theta, 2);
  const FockState omega = FockState::vacuum(space);
  const bool free = free_bose(*model);
  const json geom{{"f", fb}, {"g", gb}, {"theta_max", wedge_theta}};

  std::vector<WedgeDefect> ladder;
  for (int n : {64, 128, 256}) {
    rep.run("locality", "wedge_defect_" + std::to_string(n), "[phi'(f), phi(g)] = 0 for f in W_R, g in W_L",
            free && n == 256 ? std::min(tol, 1e-9) : tol, [&, n](json& p) {
              WedgeOptions opt;
              opt.theta_max = wedge_theta;
              opt.nodes = n;
              const WedgeDefect w = wedge_commutator_defect(f, g, omega, opt);
              ladder.push_back(w);
              p = geom;
              p["nodes"] = n;
              p["direct"] = w.direct;
              p["multiplication"] = w.multiplication;
              return std::max(w.direct, w.multiplication);
            });
  }
  rep.run("locality", "wedge_defect_decreasing", "defect shrinks as integration nodes double", 1.0, [&](json& p) {
    if (ladder.size() != 3) throw std::runtime_error("wedge defect ladder incomplete");
    double ratio = 0.0;
    for (std::size_t k = 1; k < ladder.size(); ++k) {
      ratio = std::max(ratio, ladder[k].direct / ladder[k - 1].direct);
      ratio = std::max(ratio, ladder[k].multiplication / ladder[k - 1].multiplication);
    }
    p["nodes"] = json::array({64, 128, 256});
    return ratio;
  });
  if (!free) {
    rep.run("locality", "negative_control_same_wedge", "locality fails when both supports lie in W_R", 1e-2,
            [&](json& p) {
              WedgeOptions opt;
              opt.theta_max = wedge_theta;
              opt.check_support = false;
              const auto h = TestFunction::wedge({nb[0], nb[1], nb[2], nb[3]}, unit_weights(d));
              const WedgeDefect w = wedge_commutator_defect(f, h, omega, opt);
              p = {{"f", fb}, {"g", nb}, {"nodes", opt.nodes}};
              return std::min(w.direct, w.multiplication);
            },
            true);
  }

  const auto wspace = make_fock_space(model, 24, 4.0, 2);
  CVector wf(d, 0.0), wg(d, 0.0);
  wf[0] = 1.0;
  wg[d > 1 ? 1 : 0] = 1.0;
  const auto mf = TestFunction::momentum({-0.6, 0.9}, wf), mg = TestFunction::momentum({0.8, 1.1}, wg);
  rep.run("locality", "point_locality_witness",
          free ? "two-particle commutator component vanishes for the free Bose field"
               : "two-particle commutator component of [phi(f), phi(g)] is nonzero",
          free ? 1e-10 : 1e-2,
          [&](json& p) {
            p = {{"f", {-0.6, 0.9}}, {"g", {0.8, 1.1}}, {"nodes", 24}, {"theta_max", 4.0}};
            return locality_failure_witness(*wspace, mf, mg);
          },
          !free);
}

// ---- scattering -----------------------------------------------------------

void run_scattering(const RunConfig& cfg, const ModelPtr& model, CheckReport& rep) {
  const double tol = cfg.tol.at("scattering");
  const int d = model->dim();
  const int top = std::min(cfg.nmax, 3);
  const auto space = make_fock_space(model, cfg.nodes, cfg.theta_max, top);
  auto rng = stream(cfg, 5);
  auto packets = [&](const std::vector<std::pair<double, double>>& bumps) {
    std::vector<TestFunction> fs;
    for (const auto& [c, h] : bumps) fs.push_back(TestFunction::momentum({c, h}, random_weights(d, rng)));
    return OrderedPacketList::from_packets(fs, 0.05);
  };
  const std::vector<std::vector<std::pair<double, double>>> bumps{
      {{0.3, 1.0}}, {{-1.2, 0.8}, {0.9, 0.9}}, {{-2.0, 0.7}, {-0.2, 0.7}, {1.6, 0.8}}};
  const std::vector<std::pair<double, double>> other2{{-1.8, 0.9}, {0.4, 1.0}};
  const json base{{"nodes", cfg.nodes}, {"theta_max", cfg.theta_max}, {"n_max", top}};

  for (int n = 1; n <= top; ++n) {
    const auto list = packets(bumps[n - 1]);
    rep.run("scattering", "out_state_paths_" + std::to_string(n), "field chain and projector give the same out state",
            0.01 * tol, [&](json& p) {
              p = base;
              p["n"] = n;
              return std::max(relative_residual(out_state(space, list, StatePath::FieldChain), out_state(space, list)),
                              relative_residual(in_state(space, list, StatePath::FieldChain), in_state(space, list)));
            });
  }
  for (int n = 2; n <= top; ++n) {
    const auto list = packets(bumps[n - 1]);
    rep.run("scattering", "moller_norm_" + std::to_string(n), "ordered packets have equal S- and Bose-symmetric norms",
            tol, [&](json& p) {
              p = base;
              p["n"] = n;
              const MollerNorms r = moller_norm_check(*space, list);
              return std::abs(r.norm_sym - r.norm_s);
            });
  }
  if (top >= 2)
    rep.run("scattering", "smatrix_consistency_2", "scattering operator reproduces S_2", tol, [&](json& p) {
      p = base;
      return smatrix_consistency(space, packets(bumps[1]), packets(other2));
    });
  if (top >= 3)
    rep.run("scattering", "smatrix_consistency_3", "scattering operator reproduces S_3", 10.0 * tol, [&](json& p) {
      p = base;
      return smatrix_consistency(space, packets(bumps[2]), packets(bumps[2]));
    });

  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<double> th{u(rng), u(rng), u(rng)};
  rep.run("scattering", "reduced_words_agree", "S_n^iota is independent of the reduced word", 0.001 * tol,
          [&](json& p) {
            p["theta"] = th;
            const Mat a = permutation_tensor_word(*model, 3, {1, 2, 1}, th);
            const Mat b = permutation_tensor_word(*model, 3, {2, 1, 2}, th);
            return (a - b).cwiseAbs().maxCoeff();
          });
  rep.run("scattering", "tensor_unitarity", "S_n(theta) is unitary", 0.01 * tol, [&](json& p) {
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n) {
      std::vector<double> t(n);
      for (auto& x : t) x = u(rng);
      const Mat s = scattering_tensor(*model, t);
      worst = std::max(worst, (s * s.adjoint() - Mat::Identity(s.rows(), s.cols())).cwiseAbs().maxCoeff());
    }
    p["n"] = json::array({1, 2, 3, 4});
    return worst;
  });
  if (d == 1)
    rep.run("scattering", "scalar_three_body_product", "scalar S_3 is the product of two-body phases", 0.01 * tol,
            [&](json& p) {
              p["theta"] = th;
              cplx want = 1.0;
              for (int l = 0; l < 3; ++l)
                for (int r = l + 1; r < 3; ++r) want *= model->scalar(std::abs(th[l] - th[r]));
              return std::abs(scattering_tensor(*model, th)(0, 0) - want);
            });

  if (!cfg.csv.empty()) {
    std::ofstream os(cfg.csv, std::ios::binary);
    if (!os) throw ConfigError("cannot write '" + cfg.csv + "'");
    write_amplitude_csv(os, *space, std::min(top, 2));
  }
}

}  // namespace fsmcheck
