// One line per acceptance criterion; exit status 1 if any line fails.
// Usage: fsm_acceptance [path/to/fsmcheck] [work-dir]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <regex>
#include <sstream>

#include "support.hpp"

using namespace fsm;

namespace {

// Pinned tolerances.
constexpr double kAxiomTol = 1e-9;
constexpr double kAxiomSeconds = 10.0;
constexpr double kOnSigmaAtZeroTol = 1e-10;
constexpr double kSigma2CrossingTol = 1e-10;
constexpr double kRepresentationTol = 1e-10;
constexpr double kSigmaKTol = 1e-11;
constexpr double kRepresentationSeconds = 60.0;
constexpr double kZFTol = 1e-10;
constexpr double kK0Tol = 1e-11;
constexpr double kWedgeTol = 1e-5;
constexpr double kWedgeControl = 1e-2;
constexpr double kWedgeFreeTol = 1e-9;
constexpr double kWitnessFreeTol = 1e-10;
constexpr double kWitnessInteracting = 1e-2;
constexpr double kPathTol = 1e-10;
constexpr double kMollerTol = 1e-8;
constexpr double kConsistency2Tol = 1e-8;
constexpr double kConsistency3Tol = 1e-7;
constexpr double kScalarProductTol = 1e-10;
constexpr double kReducedWordTol = 1e-11;

int failures = 0;

void report(int id, bool pass, const std::string& title, const std::string& detail) {
  std::printf("[%s] criterion %d: %s | %s\n", pass ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  std::fflush(stdout);
  failures += !pass;
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
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

// ---- 1 ----------------------------------------------------------------------

void axiom_suite() {
  const std::vector<std::pair<std::string, ModelPtr>> models{
      {"constant+1", make_constant(1)},          {"constant-1", make_constant(-1)},
      {"sinhgordon1", make_sinh_gordon(1.0)},    {"rational", test::rational_model()},
      {"diagonal", test::diagonal_model()},      {"onsigma3", make_on_sigma(3)},
      {"onsigma4", make_on_sigma(4)},            {"onsigma5", make_on_sigma(5)}};
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  double worst = 0.0;
  std::string where;
  for (const auto& [label, m] : models) {
    auto note = [&](double r, const char* which) {
      if (!(r <= worst)) {
        worst = r;
        where = label + "/" + which;
      }
    };
    for (int k = 0; k < 100; ++k) {
      const double t = u(rng), t2 = u(rng);
      note(check_unitarity(*m, t), "unitarity");
      note(check_hermitian_analyticity(*m, t), "hermitian_analyticity");
      note(check_yang_baxter(*m, t, t2), "yang_baxter");
      note(check_tcp(*m, t), "tcp");
      note(check_gauge_invariance(*m, t), "gauge");
      note(check_crossing(*m, t), "crossing");
    }
    note(check_translation_invariance(*m, 100, 5).worst, "translation");
  }
  const double secs = seconds_since(t0);
  report(1, worst < kAxiomTol && secs < kAxiomSeconds, "seven axiom residuals, 8 models, 100 rapidities",
         "worst " + fmt("%.3e", worst) + " at " + where + " (tol 1e-9), " + fmt("%.2f", secs) + " s (limit 10 s)");
}

// ---- 2 ----------------------------------------------------------------------

void on_sigma_at_zero() {
  double flip_dev = 0.0, id_dev = 0.0;
  for (int n : {3, 4, 5}) {
    const auto m = make_on_sigma(n);
    const STensor s = m->evaluate(0.0);
    flip_dev = std::max(flip_dev, max_abs_diff(s, STensor::flip(n, -1.0)));
    id_dev = std::max(id_dev, max_abs_diff(s, STensor::identity(n, -1.0)));
  }
  double cross = 0.0;
  for (int n : {3, 4, 5})
    for (int k = 0; k < 20; ++k) {
      const double t = -4.0 + 8.0 * k / 19.0;
      cross = std::max(cross, std::abs(on_sigma_coefficients(n, kI * kPi - t).s2 - on_sigma_coefficients(n, t).s2));
    }
  report(2, flip_dev < kOnSigmaAtZeroTol && cross < kSigma2CrossingTol,
         "O(N) S(0) = -flip for N = 3,4,5 and sigma2(i pi - t) = sigma2(t)",
         "|S(0) + flip| = " + fmt("%.3e", flip_dev) + " (tol 1e-10); for reference |S(0) + identity| = " +
             fmt("%.3e", id_dev) + "; sigma2 crossing " + fmt("%.3e", cross) + " (tol 1e-10)");
}

// ---- 3 ----------------------------------------------------------------------

void representation_suite() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto model = make_on_sigma(3);
  const auto space = make_fock_space(model, 8, 4.0, 4);
  const FockSpace& sp = *space;
  std::mt19937_64 rng(31);
  double hom = 0.0, uni = 0.0, idem = 0.0, sadj = 0.0, sk = 0.0;
  for (int n = 2; n <= 4; ++n) {
    const Level x = random_level(sp, n, rng), z = random_level(sp, n, rng);
    const double nx = level_norm(sp, x, n), nz = level_norm(sp, z, n);
    for (int t = 0; t < 3; ++t) {
      Permutation a(n), b(n);
      std::iota(a.begin(), a.end(), 1);
      std::iota(b.begin(), b.end(), 1);
      std::shuffle(a.begin(), a.end(), rng);
      std::shuffle(b.begin(), b.end(), rng);
      const Level lhs = apply_permutation(sp, x, n, compose(a, b));
      const Level rhs = apply_permutation(sp, apply_permutation(sp, x, n, b), n, a);
      hom = std::max(hom, level_dist(sp, lhs, rhs, n) / nx);
      const cplx ip = level_inner(sp, apply_permutation(sp, x, n, a), apply_permutation(sp, z, n, a), n);
      uni = std::max(uni, std::abs(ip - level_inner(sp, x, z, n)) / (nx * nz));
    }
    const Level px = symmetrize(sp, x, n), pz = symmetrize(sp, z, n);
    idem = std::max(idem, level_dist(sp, symmetrize(sp, px, n), px, n) / nx);
    sadj = std::max(sadj, std::abs(level_inner(sp, px, z, n) - level_inner(sp, x, pz, n)) / (nx * nz));
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    std::vector<double> th(n);
    for (auto& v : th) v = u(rng);
    for (int k = 1; k <= n; ++k)
      sk = std::max(sk, (sigma_k_tensor(*model, k, th) - permutation_tensor(*model, sigma_k(n, k), th))
                            .cwiseAbs()
                            .maxCoeff());
  }
  const double secs = seconds_since(t0);
  const bool pass = hom < kRepresentationTol && uni < kRepresentationTol && idem < kRepresentationTol &&
                    sadj < kRepresentationTol && sk < kSigmaKTol && secs < kRepresentationSeconds;
  report(3, pass, "D_n representation and P_n, n <= 4, M = 8, O(3)",
         "homomorphism " + fmt("%.2e", hom) + ", unitarity " + fmt("%.2e", uni) + ", idempotence " +
             fmt("%.2e", idem) + ", self-adjointness " + fmt("%.2e", sadj) + " (tol 1e-10); sigma_k " + fmt("%.2e", sk) +
             " (tol 1e-11); " + fmt("%.1f", secs) + " s (limit 60 s)");
}

// ---- 4 ----------------------------------------------------------------------

void zf_suite() {
  double adj = 0.0, bound = 0.0, rel = 0.0, k0 = 0.0;
  std::string worst_rel;
  for (const ModelPtr& m : {make_on_sigma(3), make_sinh_gordon(1.0)}) {
    const auto space = make_fock_space(m, m->dim() > 1 ? 4 : 6, 4.0, 5);
    std::mt19937_64 rng(41);
    for (int k = 0; k < 20; ++k) {
      const CVector p1 = test::normalized_one_particle(*space, rng);
      const CVector p2 = test::normalized_one_particle(*space, rng);
      const FockState psi = random_state(space, rng, 3);
      const FockState chi = random_state(space, rng, 4);
      adj = std::max(adj, std::abs(inner_product(annihilate(p1, chi), psi) - inner_product(chi, create(p1, psi))));
      adj = std::max(adj, std::abs(inner_product(annihilate_reflected(p1, chi), psi) -
                                   inner_product(chi, create_reflected(p1, psi))));
      bound = std::max({bound, norm(annihilate(p1, psi)) - number_norm(psi), norm(create(p1, psi)) - number_norm(psi, 1)});
      for (Relation r : all_relations()) {
        const double d = commutator_defect(r, p1, p2, psi);
        if (!(d <= rel)) {
          rel = d;
          worst_rel = m->name() + "/" + relation_name(r);
        }
      }
      const Mat kt = mixed_k_tensor(*m, space->quadrature(), p1, p2, {});
      k0 = std::max(k0, std::abs(kt(0, 0) - one_inner(*space, p1, p2)));
    }
  }
  report(4, adj < kZFTol && bound < kZFTol && rel < kZFTol && k0 < kK0Tol,
         "ZF algebra on 20 states, n <= 3, O(3) and sinh-Gordon(1)",
         "adjointness " + fmt("%.2e", adj) + ", number-bound excess " + fmt("%.2e", std::max(bound, 0.0)) +
             ", worst relation " + fmt("%.2e", rel) + " (" + worst_rel + ") (tol 1e-10); K_0 " + fmt("%.2e", k0) +
             " (tol 1e-11)");
}

// ---- 5 ----------------------------------------------------------------------

const WedgeBump kRight{0.805, 2.343, 0.652, 2.271};
const WedgeBump kLeft{-2.288, -0.696, 2.17, 0.642};
const WedgeBump kRightControl{1.7, 1.1, 0.6, 0.8};
constexpr double kWedgeTheta = 4.4;

void wedge_locality() {
  bool pass = true;
  std::ostringstream detail;
  for (const ModelPtr& m : {make_on_sigma(3), make_sinh_gordon(1.0)}) {
    const auto space = make_fock_space(m, 6, kWedgeTheta, 2);
    const FockState omega = FockState::vacuum(space);
    const auto f = TestFunction::wedge(kRight, test::unit_weights(m->dim()));
    const auto g = TestFunction::wedge(kLeft, test::unit_weights(m->dim()));
    detail << m->name() << " [";
    double prev_a = 1.0, prev_b = 1.0;
    for (int n : {64, 128, 256}) {
      WedgeOptions opt;
      opt.theta_max = kWedgeTheta;
      opt.nodes = n;
      const WedgeDefect w = wedge_commutator_defect(f, g, omega, opt);
      pass = pass && w.direct < kWedgeTol && w.multiplication < kWedgeTol && w.direct < prev_a &&
             w.multiplication < prev_b;
      prev_a = w.direct;
      prev_b = w.multiplication;
      detail << n << ": " << fmt("%.2e", w.direct) << "/" << fmt("%.2e", w.multiplication) << (n < 256 ? ", " : "] ");
    }
    WedgeOptions opt;
    opt.theta_max = kWedgeTheta;
    opt.check_support = false;
    const auto h = TestFunction::wedge(kRightControl, test::unit_weights(m->dim()));
    const WedgeDefect c = wedge_commutator_defect(f, h, omega, opt);
    pass = pass && c.direct > kWedgeControl && c.multiplication > kWedgeControl;
    detail << "control " << fmt("%.2e", std::min(c.direct, c.multiplication)) << "; ";
  }
  {
    const auto space = make_fock_space(make_constant(1), 6, kWedgeTheta, 3);
    std::mt19937_64 rng(51);
    const FockState psi = random_state(space, rng, 1);
    WedgeOptions opt;
    opt.theta_max = kWedgeTheta;
    opt.nodes = 256;
    const WedgeDefect w =
        wedge_commutator_defect(TestFunction::wedge(kRight, {1.0}), TestFunction::wedge(kLeft, {1.0}), psi, opt);
    pass = pass && w.direct < kWedgeFreeTol && w.multiplication < kWedgeFreeTol;
    detail << "free(256) " << fmt("%.2e", std::max(w.direct, w.multiplication));
  }
  report(5, pass, "wedge-local commutator defect at the vacuum, direct/multiplication routes",
         detail.str() + " (tol 1e-5 at 64 nodes and decreasing; control > 1e-2; free < 1e-9)");
}

// ---- 6 ----------------------------------------------------------------------

void locality_witness() {
  auto witness = [](const ModelPtr& m) {
    const int d = m->dim();
    CVector wf(d, 0.0), wg(d, 0.0);
    wf[0] = 1.0;
    wg[d > 1 ? 1 : 0] = 1.0;
    const auto space = make_fock_space(m, 24, 4.0, 2);
    return locality_failure_witness(*space, TestFunction::wedge(kRight, wf), TestFunction::wedge(kLeft, wg));
  };
  const double free = witness(make_constant(1));
  const double on = witness(make_on_sigma(3));
  const double sg = witness(make_sinh_gordon(1.0));
  report(6, free < kWitnessFreeTol && on > kWitnessInteracting && sg > kWitnessInteracting,
         "two-particle component of [phi(f), phi(g)] for spacelike wedge bumps",
         "free Bose " + fmt("%.2e", free) + " (tol 1e-10); O(3) " + fmt("%.3f", on) + ", sinh-Gordon " +
             fmt("%.3f", sg) + " (need > 0.01)");
}

// ---- 7 ----------------------------------------------------------------------

OrderedPacketList packets(const std::vector<std::pair<double, double>>& bumps, int d, std::mt19937_64& rng) {
  std::vector<TestFunction> fs;
  for (const auto& [c, h] : bumps) fs.push_back(TestFunction::momentum({c, h}, test::random_weights(d, rng)));
  return OrderedPacketList::from_packets(fs, 0.05);
}

void scattering_suite() {
  const std::vector<std::vector<std::pair<double, double>>> sets{
      {{0.3, 1.0}}, {{-1.2, 0.8}, {0.9, 0.9}}, {{-2.0, 0.7}, {-0.2, 0.7}, {1.6, 0.8}}};
  const std::vector<std::pair<double, double>> other2{{-1.5, 0.6}, {0.2, 1.0}};
  std::mt19937_64 rng(71);
  double paths = 0.0, moller = 0.0, c2 = 0.0, c3 = 0.0;
  for (const ModelPtr& m : {make_on_sigma(3), make_sinh_gordon(1.0)}) {
    const int d = m->dim();
    const auto space = make_fock_space(m, d > 1 ? 12 : 16, 4.0, 3);
    for (const auto& s : sets) {
      const auto list = packets(s, d, rng);
      const FockState a = out_state(space, list), b = out_state(space, list, StatePath::FieldChain);
      const FockState c = in_state(space, list), e = in_state(space, list, StatePath::FieldChain);
      paths = std::max({paths, norm_diff(a, b) / norm(a), norm_diff(c, e) / norm(c)});
      if (s.size() >= 2) {
        const MollerNorms r = moller_norm_check(*space, list);
        moller = std::max(moller, std::abs(r.norm_sym - r.norm_s));
      }
    }
    c2 = std::max(c2, smatrix_consistency(space, packets(sets[1], d, rng), packets(other2, d, rng)));
    c3 = std::max(c3, smatrix_consistency(space, packets(sets[2], d, rng), packets(sets[2], d, rng)));
  }
  double prod = 0.0;
  {
    const auto m = make_sinh_gordon(1.0);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int k = 0; k < 10; ++k) {
      const std::vector<double> th{u(rng), u(rng), u(rng)};
      cplx want = 1.0;
      for (int l = 0; l < 3; ++l)
        for (int r = l + 1; r < 3; ++r) want *= m->scalar(std::abs(th[l] - th[r]));
      prod = std::max(prod, std::abs(scattering_tensor(*m, th)(0, 0) - want));
    }
  }
  double words = 0.0;
  {
    const auto m = make_on_sigma(3);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int k = 0; k < 10; ++k) {
      const std::vector<double> th{u(rng), u(rng), u(rng)};
      words = std::max(words, (permutation_tensor_word(*m, 3, {1, 2, 1}, th) - permutation_tensor_word(*m, 3, {2, 1, 2}, th))
                                  .cwiseAbs()
                                  .maxCoeff());
    }
  }
  report(7,
         paths < kPathTol && moller < kMollerTol && c2 < kConsistency2Tol && c3 < kConsistency3Tol &&
             prod < kScalarProductTol && words < kReducedWordTol,
         "scattering states and S_n, O(3) and sinh-Gordon(1)",
         "paths " + fmt("%.2e", paths) + " (tol 1e-10), Moller " + fmt("%.2e", moller) + " (tol 1e-8), consistency n=2 " +
             fmt("%.2e", c2) + " (tol 1e-8), n=3 " + fmt("%.2e", c3) + " (tol 1e-7), scalar product " +
             fmt("%.2e", prod) + " (tol 1e-10), reduced words " + fmt("%.2e", words) + " (tol 1e-11)");
}

// ---- 8 ----------------------------------------------------------------------

std::string strip_timing(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  static const std::regex wall("\"wall_ms\": [-+0-9.eE]+");
  return std::regex_replace(ss.str(), wall, "\"wall_ms\": 0");
}

void determinism(int argc, char** argv) {
  if (argc < 2) {
    report(8, false, "repeated full-suite runs are byte-identical", "fsmcheck path not given");
    return;
  }
  const std::filesystem::path work = argc > 2 ? argv[2] : std::filesystem::temp_directory_path() / "fsm_acceptance";
  std::filesystem::create_directories(work);
  std::vector<std::string> reports;
  int rc_any = 0;
  for (const char* run : {"a", "b"}) {
    const auto out = (work / (std::string("report_") + run + ".json")).string();
    const std::string cmd = std::string("\"") + argv[1] + "\" all --model onsigma --N 3 --seed 5 --out \"" + out +
                            "\" 2>/dev/null";
    rc_any |= std::system(cmd.c_str());
    reports.push_back(strip_timing(out));
  }
  const bool same = !reports[0].empty() && reports[0] == reports[1];
  report(8, same && rc_any == 0, "repeated full-suite runs are byte-identical",
         std::string("fsmcheck all --seed 5 twice: ") + (same ? "identical" : "different") +
             " after removing wall_ms, " + std::to_string(reports[0].size()) + " bytes, exit " +
             (rc_any == 0 ? "0/0" : "nonzero"));
}

}  // namespace

int main(int argc, char** argv) {
  axiom_suite();
  on_sigma_at_zero();
  representation_suite();
  zf_suite();
  wedge_locality();
  locality_witness();
  scattering_suite();
  determinism(argc, argv);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
