#include "fsm/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

namespace fsm {

OrderedPacketList OrderedPacketList::from_packets(std::vector<TestFunction> packets, double margin) {
  OrderedPacketList list;
  for (const TestFunction& f : packets) {
    const auto r = f.rapidity_support();
    if (!r) throw std::invalid_argument("ordered packets must be momentum bumps");
    list.intervals.push_back(*r);
  }
  list.packets = std::move(packets);
  list.margin = margin;
  return list;
}

bool OrderedPacketList::ordered() const {
  if (margin <= 0.0) return false;
  for (std::size_t k = 1; k < intervals.size(); ++k)
    if (intervals[k].first - intervals[k - 1].second < margin) return false;
  return true;
}

void OrderedPacketList::validate() const {
  if (margin <= 0.0) throw OrderingError("ordering margin must be positive");
  for (std::size_t k = 1; k < intervals.size(); ++k)
    if (intervals[k].first - intervals[k - 1].second < margin)
      throw OrderingError("packet " + std::to_string(k + 1) + " does not follow packet " + std::to_string(k));
}

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

std::vector<CVector> plus_parts(const FockSpace& space, const OrderedPacketList& list) {
  std::vector<CVector> out;
  for (const TestFunction& f : list.packets) out.push_back(shell_transform(f, space).plus);
  return out;
}

Level product(const std::vector<CVector>& parts, bool reversed) {
  Level acc{cplx(1.0)};
  const int n = static_cast<int>(parts.size());
  for (int k = 0; k < n; ++k) acc = tensor(acc, parts[reversed ? n - 1 - k : k]);
  return acc;
}

FockState build(FockSpacePtr space, const OrderedPacketList& list, StatePath path, bool reversed) {
  list.validate();
  const int n = list.size();
  if (n > space->n_max()) throw TruncationError("more packets than the truncation allows");
  if (path == StatePath::FieldChain) {
    FockState psi = FockState::vacuum(space);
    for (int k = 0; k < n; ++k) psi = apply_field(list.packets[reversed ? k : n - 1 - k], psi);
    return psi;
  }
  Level p = symmetrize(*space, product(plus_parts(*space, list), reversed), n);
  const double f = std::sqrt(factorial(n));
  for (auto& v : p) v *= f;
  FockState out(space);
  out.set_level(n, std::move(p));
  return out;
}

// Moves slot l of the input to slot perm[l] of the output.
Level permute_slots(const Level& x, std::size_t s, const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  Level y(x.size());
  std::vector<std::size_t> stride(n);
  for (int l = n - 1, st = 1; l >= 0; --l, st *= static_cast<int>(s)) stride[l] = static_cast<std::size_t>(st);
  std::vector<std::size_t> idx(n);
  for (std::size_t t = 0; t < x.size(); ++t) {
    std::size_t r = t, dst = 0;
    for (int l = n - 1; l >= 0; --l, r /= s) idx[l] = r % s;
    for (int l = 0; l < n; ++l) dst += idx[l] * stride[perm[l]];
    y[dst] = x[t];
  }
  return y;
}

}  // namespace

FockState out_state(FockSpacePtr space, const OrderedPacketList& packets, StatePath path) {
  return build(std::move(space), packets, path, false);
}

FockState in_state(FockSpacePtr space, const OrderedPacketList& packets, StatePath path) {
  return build(std::move(space), packets, path, true);
}

Level bose_symmetrize(const FockSpace& space, const Level& psi, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Level acc(psi.size(), cplx(0.0));
  int count = 0;
  do {
    const Level y = permute_slots(psi, space.slots(), perm);
    for (std::size_t t = 0; t < acc.size(); ++t) acc[t] += y[t];
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (auto& v : acc) v /= static_cast<double>(count);
  return acc;
}

MollerNorms moller_norm_check(const FockSpace& space, const OrderedPacketList& packets) {
  const int n = packets.size();
  const Level x = product(plus_parts(space, packets), false);
  const Level ps = bose_symmetrize(space, x, n);
  const Level pn = symmetrize(space, x, n);
  return {std::sqrt(std::abs(level_inner(space, ps, ps, n))), std::sqrt(std::abs(level_inner(space, pn, pn, n)))};
}

Mat scattering_tensor(const SMatrixModel& model, const std::vector<double>& theta) {
  const int n = static_cast<int>(theta.size());
  if (n < 1 || n > 4) throw std::invalid_argument("scattering_tensor supports 1 <= n <= 4");
  const int d = model.dim();
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  std::stable_sort(pi.begin(), pi.end(), [&](int x, int y) { return theta[x] < theta[y]; });
  std::vector<double> sorted(n);
  for (int k = 0; k < n; ++k) sorted[k] = theta[pi[k]];
  const Mat t = permutation_tensor(model, inversion(n), sorted);

  int dn = 1;
  for (int k = 0; k < n; ++k) dn *= d;
  Mat out(dn, dn);
  std::vector<int> al(n), be(n);
  for (int row = 0; row < dn; ++row) {
    for (int l = n - 1, r = row; l >= 0; --l, r /= d) al[l] = r % d;
    int tr = 0;
    for (int k = 0; k < n; ++k) tr = tr * d + al[pi[k]];
    for (int col = 0; col < dn; ++col) {
      for (int l = n - 1, r = col; l >= 0; --l, r /= d) be[l] = r % d;
      int tc = 0;
      for (int k = n - 1; k >= 0; --k) tc = tc * d + be[pi[k]];
      out(row, col) = t(tr, tc);
    }
  }
  return out;
}

double smatrix_consistency(FockSpacePtr space, const OrderedPacketList& a, const OrderedPacketList& b) {
  a.validate();
  b.validate();
  const int n = a.size();
  if (b.size() != n) throw MismatchError("packet lists differ in length");
  const cplx lhs = inner_product(out_state(space, a), in_state(space, b));

  const std::vector<CVector> ap = plus_parts(*space, a), bp = plus_parts(*space, b);
  const Level x = bose_symmetrize(*space, product(ap, false), n);
  const Level y = bose_symmetrize(*space, product(bp, true), n);
  const int m = space->grid_size(), d = space->dim();
  int dn = 1;
  for (int k = 0; k < n; ++k) dn *= d;
  std::size_t points = 1;
  for (int k = 0; k < n; ++k) points *= static_cast<std::size_t>(m);

  // Entry of grid point g, components c: sum_l (i_l D + c_l) s^{n-1-l}.
  const std::size_t s = space->slots();
  std::vector<int> node(n), comp(n);
  std::vector<double> theta(n);
  cplx rhs = 0.0;
  for (std::size_t g = 0; g < points; ++g) {
    double w = 1.0;
    for (int l = n - 1, r = static_cast<int>(g); l >= 0; --l, r /= m) node[l] = r % m;
    for (int l = 0; l < n; ++l) {
      theta[l] = space->node(node[l]);
      w *= space->weight(node[l]);
    }
    auto entry = [&](int c) {
      for (int l = n - 1, r = c; l >= 0; --l, r /= d) comp[l] = r % d;
      std::size_t t = 0;
      for (int l = 0; l < n; ++l) t = t * s + static_cast<std::size_t>(node[l]) * d + comp[l];
      return t;
    };
    CVector yv(dn), xv(dn);
    bool any = false;
    for (int c = 0; c < dn; ++c) {
      const std::size_t t = entry(c);
      yv[c] = y[t];
      xv[c] = x[t];
      any = any || yv[c] != cplx(0.0);
    }
    if (!any) continue;
    const Mat sn = scattering_tensor(space->model(), theta);
    cplx acc = 0.0;
    for (int r = 0; r < dn; ++r) {
      if (xv[r] == cplx(0.0)) continue;
      cplx row = 0.0;
      for (int c = 0; c < dn; ++c) row += sn(r, c) * yv[c];
      acc += std::conj(xv[r]) * row;
    }
    rhs += w * acc;
  }
  rhs *= factorial(n);

  double scale = 1.0;
  for (int k = 0; k < n; ++k) scale *= one_norm(*space, ap[k]) * one_norm(*space, bp[k]);
  if (scale == 0.0) throw std::invalid_argument("smatrix_consistency: a packet vanishes on the rapidity grid");
  return std::abs(lhs - rhs) / scale;
}

void write_amplitude_csv(std::ostream& os, const FockSpace& space, int n) {
  const int m = space.grid_size(), d = space.dim();
  for (int l = 1; l <= n; ++l) os << 'i' << l << ',';
  for (int l = 1; l <= n; ++l) os << "theta" << l << ',';
  for (int l = 1; l <= n; ++l) os << "in" << l << ',';
  for (int l = 1; l <= n; ++l) os << "out" << l << ',';
  os << "re,im\n";
  int dn = 1;
  std::size_t points = 1;
  for (int k = 0; k < n; ++k) {
    dn *= d;
    points *= static_cast<std::size_t>(m);
  }
  std::vector<int> node(n), al(n), be(n);
  std::vector<double> theta(n);
  char buf[64];
  for (std::size_t g = 0; g < points; ++g) {
    for (int l = n - 1, r = static_cast<int>(g); l >= 0; --l, r /= m) node[l] = r % m;
    for (int l = 0; l < n; ++l) theta[l] = space.node(node[l]);
    const Mat sn = scattering_tensor(space.model(), theta);
    for (int row = 0; row < dn; ++row) {
      for (int l = n - 1, r = row; l >= 0; --l, r /= d) al[l] = r % d;
      for (int col = 0; col < dn; ++col) {
        for (int l = n - 1, r = col; l >= 0; --l, r /= d) be[l] = r % d;
        for (int l = 0; l < n; ++l) os << node[l] << ',';
        for (int l = 0; l < n; ++l) {
          std::snprintf(buf, sizeof buf, "%.17g", theta[l]);
          os << buf << ',';
        }
        for (int l = 0; l < n; ++l) os << be[l] + 1 << ',';
        for (int l = 0; l < n; ++l) os << al[l] + 1 << ',';
        std::snprintf(buf, sizeof buf, "%.17g,%.17g", sn(row, col).real(), sn(row, col).imag());
        os << buf << '\n';
      }
    }
  }
}

}  // namespace fsm
