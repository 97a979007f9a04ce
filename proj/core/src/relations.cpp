#include <cmath>

#include "fsm/zf.hpp"

namespace fsm {

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::ZZ: return "zz";
    case Relation::ZdZd: return "zdzd";
    case Relation::ZZd: return "zzd";
    case Relation::ZdZ: return "zdz";
    case Relation::ZZ_R: return "zz_reflected";
    case Relation::ZdZd_R: return "zdzd_reflected";
    case Relation::ZZd_R: return "zzd_reflected";
    case Relation::ZdZ_R: return "zdz_reflected";
    case Relation::MixedZZ: return "mixed_zz";
    case Relation::MixedZdZd: return "mixed_zdzd";
    case Relation::MixedZZd: return "mixed_zzd";
    case Relation::MixedZdZ: return "mixed_zdz";
  }
  return "?";
}

std::vector<Relation> all_relations() {
  return {Relation::ZZ,     Relation::ZdZd,   Relation::ZZd,     Relation::ZdZ,
          Relation::ZZ_R,   Relation::ZdZd_R, Relation::ZZd_R,   Relation::ZdZ_R,
          Relation::MixedZZ, Relation::MixedZdZd, Relation::MixedZZd, Relation::MixedZdZ};
}

namespace {

// S'^{ab}_{cd}(x) = S^{ba}_{dc}(-x). For x = theta_j - theta_i the table
// entry (j, i) holds S(theta_i - theta_j) = S(-x).
struct Kernels {
  const FockSpace& sp;
  int d, dd;
  // S(theta_j - theta_i)^{ab}_{ce}
  cplx s(int i, int j, int a, int b, int c, int e) const { return sp.s_table(i, j)[(a * d + b) * dd + c * d + e]; }
  // S'(theta_j - theta_i)^{ab}_{ce}
  cplx sp_(int i, int j, int a, int b, int c, int e) const { return sp.s_table(j, i)[(b * d + a) * dd + e * d + c]; }
};

// zz: sqrt((n+1)(n+2)) sum conj(phi1^a(t_i)) conj(phi2^b(t_j)) S^{ba}_{dc}(t_i - t_j) psi^{dc..}(t_i, t_j, ..)
// reflected: same with S', contracting the two rightmost slots as psi^{..cd}(.., t_j, t_i)
FockState zz_rhs(const CVector& phi1, const CVector& phi2, const FockState& psi, bool reflected) {
  const FockSpace& space = *psi.space();
  const Kernels k{space, space.dim(), space.dim() * space.dim()};
  const int d = k.d, m = space.grid_size();
  const std::size_t s = space.slots();
  // W[(i,dl),(j,c)] (left) or W[(j,c),(i,dl)] (right)
  CVector w(s * s, cplx(0.0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int dl = 0; dl < d; ++dl)
        for (int c = 0; c < d; ++c) {
          cplx acc = 0.0;
          for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
              // S^{ba}_{dl c}(t_i - t_j) = table(j, i)
              const cplx sv = reflected ? k.sp_(j, i, b, a, dl, c) : k.s(j, i, b, a, dl, c);
              acc += std::conj(phi1[i * d + a]) * std::conj(phi2[j * d + b]) * sv;
            }
          acc *= space.weight(i) * space.weight(j);
          if (reflected)
            w[(j * d + c) * s + (i * d + dl)] = acc;
          else
            w[(i * d + dl) * s + (j * d + c)] = acc;
        }
  FockState out(psi.space());
  for (int n = 0; n + 2 <= psi.n_max(); ++n) {
    const Level& x = psi.level(n + 2);
    if (x.empty()) continue;
    const std::size_t len = space.level_size(n);
    Level y(len, cplx(0.0));
    for (std::size_t p = 0; p < s * s; ++p) {
      if (w[p] == cplx(0.0)) continue;
      if (reflected) {
        for (std::size_t r = 0; r < len; ++r) y[r] += w[p] * x[r * s * s + p];
      } else {
        const cplx* row = &x[p * len];
        for (std::size_t r = 0; r < len; ++r) y[r] += w[p] * row[r];
      }
    }
    const double f = std::sqrt(static_cast<double>((n + 1) * (n + 2)));
    for (auto& v : y) v *= f;
    out.set_level(n, std::move(y));
  }
  return out;
}

// Two-particle function exchanged by one S factor:
// left:  chi^{ab}(x, y) = S^{ab}_{ce}(y - x) phi1^c(y) phi2^e(x)
// right: xi^{ab}(x, y) = S'^{ba}_{ec}(x - y) phi1^e(x) phi2^c(y)
Level exchanged_pair(const FockSpace& space, const CVector& phi1, const CVector& phi2, bool reflected) {
  const Kernels k{space, space.dim(), space.dim() * space.dim()};
  const int d = k.d, m = space.grid_size();
  const std::size_t s = space.slots();
  Level out(s * s, cplx(0.0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          cplx acc = 0.0;
          for (int c = 0; c < d; ++c)
            for (int e = 0; e < d; ++e) {
              if (reflected)  // S'(t_i - t_j) = table entry (j, i) in primed form
                acc += k.sp_(j, i, b, a, e, c) * phi1[i * d + e] * phi2[j * d + c];
              else
                acc += k.s(i, j, a, b, c, e) * phi1[j * d + c] * phi2[i * d + e];
            }
          out[(i * d + a) * s + (j * d + b)] = acc;
        }
  return out;
}

FockState zdzd_rhs(const CVector& phi1, const CVector& phi2, const FockState& psi, bool reflected) {
  const FockSpace& space = *psi.space();
  const Level pair = exchanged_pair(space, phi1, phi2, reflected);
  FockState out(psi.space());
  for (int n = 0; n + 2 <= psi.n_max(); ++n) {
    const Level& x = psi.level(n);
    if (x.empty()) continue;
    Level prod = reflected ? tensor(x, pair) : tensor(pair, x);
    Level y = symmetrize(space, prod, n + 2);
    const double f = std::sqrt(static_cast<double>((n + 1) * (n + 2)));
    for (auto& v : y) v *= f;
    out.set_level(n + 2, std::move(y));
  }
  return out;
}

// <phi1, phi2> psi + n P_n(Y) with
// left:  Y^{g t}(x_j, ..) = sum_i w_i conj(phi1^a(t_i)) phi2^b(x_j) S^{a g}_{b dl}(x_j - t_i) psi^{dl t}(t_i, ..)
// right: Y^{t g}(.., x_j) = sum_i w_i conj(phi1^a(t_i)) phi2^b(x_j) S'^{a g}_{b dl}(x_j - t_i) psi^{t dl}(.., t_i)
FockState zzd_rhs(const CVector& phi1, const CVector& phi2, const FockState& psi, bool reflected) {
  const FockSpace& space = *psi.space();
  const Kernels k{space, space.dim(), space.dim() * space.dim()};
  const int d = k.d, m = space.grid_size();
  const std::size_t s = space.slots();
  // kernel G[(j,g),(i,dl)]
  CVector g(s * s, cplx(0.0));
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i)
      for (int gg = 0; gg < d; ++gg)
        for (int dl = 0; dl < d; ++dl) {
          cplx acc = 0.0;
          for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
              const cplx sv = reflected ? k.sp_(i, j, a, gg, b, dl) : k.s(i, j, a, gg, b, dl);
              acc += std::conj(phi1[i * d + a]) * phi2[j * d + b] * sv;
            }
          g[(j * d + gg) * s + (i * d + dl)] = space.weight(i) * acc;
        }
  const cplx ip = one_inner(space, phi1, phi2);
  FockState out = ip * psi;
  for (int n = 1; n <= psi.n_max(); ++n) {
    const Level& x = psi.level(n);
    if (x.empty()) continue;
    const std::size_t len = space.level_size(n - 1);
    Level y(x.size(), cplx(0.0));
    for (std::size_t jg = 0; jg < s; ++jg)
      for (std::size_t id = 0; id < s; ++id) {
        const cplx c = g[jg * s + id];
        if (c == cplx(0.0)) continue;
        if (reflected) {
          for (std::size_t r = 0; r < len; ++r) y[r * s + jg] += c * x[r * s + id];
        } else {
          const cplx* src = &x[id * len];
          cplx* dst = &y[jg * len];
          for (std::size_t r = 0; r < len; ++r) dst[r] += c * src[r];
        }
      }
    Level py = symmetrize(space, y, n);
    Level& o = out.ensure(n);
    for (std::size_t r = 0; r < o.size(); ++r) o[r] += static_cast<double>(n) * py[r];
  }
  return out;
}

// sum over the grid basis e_{j a} = delta / sqrt(w_j) of z^dagger(e) z(e) psi
FockState number_resolution(const FockState& psi, bool reflected) {
  const FockSpace& space = *psi.space();
  FockState out(psi.space());
  CVector e(space.slots(), cplx(0.0));
  for (int s = 0; s < space.slots(); ++s) {
    e[s] = 1.0 / std::sqrt(space.weight(s / space.dim()));
    out += reflected ? create_reflected(e, annihilate_reflected(e, psi)) : create(e, annihilate(e, psi));
    e[s] = 0.0;
  }
  return out;
}

FockState number_operator(const FockState& psi) {
  FockState out = psi;
  for (int n = 0; n <= psi.n_max(); ++n)
    for (auto& v : out.level(n)) v *= static_cast<double>(n);
  return out;
}

}  // namespace

double commutator_defect(Relation kind, const CVector& phi1, const CVector& phi2, const FockState& psi) {
  const RapidityQuadrature& q = psi.space()->quadrature();
  switch (kind) {
    case Relation::ZZ:
      return norm_diff(annihilate(phi1, annihilate(phi2, psi)), zz_rhs(phi1, phi2, psi, false));
    case Relation::ZZ_R:
      return norm_diff(annihilate_reflected(phi1, annihilate_reflected(phi2, psi)), zz_rhs(phi1, phi2, psi, true));
    case Relation::ZdZd:
      return norm_diff(create(phi1, create(phi2, psi)), zdzd_rhs(phi1, phi2, psi, false));
    case Relation::ZdZd_R:
      return norm_diff(create_reflected(phi1, create_reflected(phi2, psi)), zdzd_rhs(phi1, phi2, psi, true));
    case Relation::ZZd:
      return norm_diff(annihilate(phi1, create(phi2, psi)), zzd_rhs(phi1, phi2, psi, false));
    case Relation::ZZd_R:
      return norm_diff(annihilate_reflected(phi1, create_reflected(phi2, psi)), zzd_rhs(phi1, phi2, psi, true));
    case Relation::ZdZ:
      return norm_diff(number_resolution(psi, false), number_operator(psi));
    case Relation::ZdZ_R:
      return norm_diff(number_resolution(psi, true), number_operator(psi));
    case Relation::MixedZZ:
      return norm_diff(annihilate_reflected(phi1, annihilate(phi2, psi)),
                       annihilate(phi2, annihilate_reflected(phi1, psi)));
    case Relation::MixedZdZd:
      return norm_diff(create_reflected(phi1, create(phi2, psi)), create(phi2, create_reflected(phi1, psi)));
    case Relation::MixedZZd: {
      const FockState c = annihilate_reflected(phi1, create(phi2, psi)) - create(phi2, annihilate_reflected(phi1, psi));
      return norm_diff(c, apply_mixed_k(q, phi1, phi2, psi));
    }
    case Relation::MixedZdZ: {
      const FockState c = create_reflected(phi1, annihilate(phi2, psi)) - annihilate(phi2, create_reflected(phi1, psi));
      return norm_diff(c, apply_mixed_l(q, phi1, phi2, psi));
    }
  }
  return 0.0;
}

}  // namespace fsm
