// Exact random-walk machinery on two finite groups:
//
//   Heisenberg H1(n): triples (x, y, z) mod n with
//     (x, y, z)(x', y', z') = (x+x', y+y', z+z'+xy'),
//   stepped by the four generators (+-1, 0, 0), (0, +-1, 0) with weight 1/4.
//
//   Affine A_p: pairs (a, b), a in (Z/p)^*, with
//     (a1, b1)(a2, b2) = (a1 a2, a1 b2 + b1),
//   stepped by {(1,0), (1,1), (1,-1), (g,0), (g^{-1},0)} with weight 1/5,
//   g the smallest primitive root mod p.
//
// Both walks are analyzed through their irreducible representations. The
// p-dimensional Heisenberg irrep at label a sends the step measure to the
// circulant+diagonal matrix build_harper(p, a) (the bridge identity), and
// the (p-1)-dimensional affine irrep in the basis indexed by powers of g
// sends it to build_affine_transform(p). Chi-square distances to uniform
// follow from Plancherel:
//
//   chi^2(k) = sum_{rho != trivial} d_rho * ||Qhat(rho)^k||_F^2
//            = |G| * sum_g |Q^{*k}(g) - U(g)|^2,
//
// and TV(Q^{*k}, U) <= (1/2) sqrt(chi^2(k)).
//
// Everything here is brute-force checkable: dense enumeration is guarded at
// 1e5 elements (Heisenberg n <= 46, affine p <= 317).
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "harper/common.hpp"

namespace harper {

// ---------------------------------------------------------------------------
// Elements and groups

struct HeisenbergElement {
  std::uint64_t x = 0, y = 0, z = 0;
  bool operator==(const HeisenbergElement&) const = default;
};

struct AffineElement {
  std::uint64_t a = 1, b = 0;
  bool operator==(const AffineElement&) const = default;
};

class HeisenbergGroup {
 public:
  // n >= 2; n^3 <= 1e5 (dense-enumeration guard).
  explicit HeisenbergGroup(std::uint64_t n);

  std::uint64_t modulus() const { return n_; }
  std::size_t size() const { return static_cast<std::size_t>(n_ * n_ * n_); }
  HeisenbergElement identity() const { return {0, 0, 0}; }
  HeisenbergElement mul(const HeisenbergElement& g1,
                        const HeisenbergElement& g2) const;
  HeisenbergElement inverse(const HeisenbergElement& g) const;
  std::size_t index(const HeisenbergElement& g) const;
  HeisenbergElement element(std::size_t idx) const;
  bool operator==(const HeisenbergGroup&) const = default;

 private:
  std::uint64_t n_;
};

class AffineGroup {
 public:
  // p prime; p(p-1) <= 1e5 (dense-enumeration guard).
  explicit AffineGroup(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  std::uint64_t generator() const { return g_; }  // smallest primitive root
  std::size_t size() const { return static_cast<std::size_t>(p_ * (p_ - 1)); }
  AffineElement identity() const { return {1, 0}; }
  AffineElement mul(const AffineElement& g1, const AffineElement& g2) const;
  AffineElement inverse(const AffineElement& g) const;
  std::size_t index(const AffineElement& g) const;
  AffineElement element(std::size_t idx) const;
  bool operator==(const AffineGroup&) const = default;

 private:
  std::uint64_t p_;
  std::uint64_t g_;
};

// ---------------------------------------------------------------------------
// Distributions

template <class Group>
struct GroupDistribution {
  Group group;
  std::vector<double> weights;  // indexed by Group::index
};

template <class Group>
void validate_distribution(const GroupDistribution<Group>& d) {
  if (d.weights.size() != d.group.size())
    throw std::invalid_argument("distribution: weight vector size mismatch");
  double total = 0.0;
  for (double w : d.weights) {
    if (!(w >= 0.0))
      throw std::invalid_argument("distribution: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("distribution: weights must sum to 1");
}

template <class Group, class Element>
GroupDistribution<Group> delta_distribution(const Group& g, const Element& at) {
  GroupDistribution<Group> d{g, std::vector<double>(g.size(), 0.0)};
  d.weights[g.index(at)] = 1.0;
  return d;
}

template <class Group>
GroupDistribution<Group> uniform_distribution(const Group& g) {
  return {g, std::vector<double>(g.size(), 1.0 / static_cast<double>(g.size()))};
}

GroupDistribution<HeisenbergGroup> heisenberg_step_distribution(
    std::uint64_t n);
GroupDistribution<AffineGroup> affine_step_distribution(std::uint64_t p);

// (P * Q)(x) = sum_h P(x h^{-1}) Q(h); groups must match.
template <class Group>
GroupDistribution<Group> convolve(const GroupDistribution<Group>& p,
                                  const GroupDistribution<Group>& q) {
  if (!(p.group == q.group))
    throw std::invalid_argument("convolve: group mismatch");
  const Group& g = p.group;
  const std::size_t m = g.size();
  GroupDistribution<Group> out{g, std::vector<double>(m, 0.0)};
  for (std::size_t h = 0; h < m; ++h) {
    const double qh = q.weights[h];
    if (qh == 0.0) continue;
    const auto h_inv = g.inverse(g.element(h));
    for (std::size_t x = 0; x < m; ++x)
      out.weights[x] +=
          p.weights[g.index(g.mul(g.element(x), h_inv))] * qh;
  }
  return out;
}

template <class Group>
double tv_distance(const GroupDistribution<Group>& p,
                   const GroupDistribution<Group>& q) {
  if (!(p.group == q.group))
    throw std::invalid_argument("tv_distance: group mismatch");
  double total = 0.0;
  for (std::size_t i = 0; i < p.weights.size(); ++i)
    total += std::abs(p.weights[i] - q.weights[i]);
  return total / 2.0;
}

// ---------------------------------------------------------------------------
// Irreducible representations

// Small dense complex matrix, row-major.
struct CMatrix {
  std::size_t d = 0;
  std::vector<cplx> a;

  CMatrix() = default;
  explicit CMatrix(std::size_t dim) : d(dim), a(dim * dim, cplx{0.0, 0.0}) {}

  cplx& at(std::size_t i, std::size_t j) { return a[i * d + j]; }
  const cplx& at(std::size_t i, std::size_t j) const { return a[i * d + j]; }

  static CMatrix identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
  }
};

CMatrix multiply(const CMatrix& lhs, const CMatrix& rhs);
double frobenius_norm_sq(const CMatrix& m);
cplx trace(const CMatrix& m);

template <class Element>
struct Irrep {
  std::string label;
  std::size_t dim = 0;
  std::function<CMatrix(const Element&)> evaluate;
};

// p prime: p^2 characters chi_{a,b}(x,y,z) = e^{2 pi i (ax+by)/p} and p-1
// p-dimensional irreps rho_a(x,y,z) f(t) = e^{2 pi i a(z+yt)/p} f(t+x).
std::vector<Irrep<HeisenbergElement>> heisenberg_irreps(std::uint64_t p);

// p prime: p-1 characters chi_alpha(a,b) = e^{2 pi i alpha s(a)/(p-1)} with
// s the discrete log base g, and one (p-1)-dimensional irrep
// rho(a,b) f(j) = e^{2 pi i j b/p} f(aj) in the basis delta_{g^m}.
std::vector<Irrep<AffineElement>> affine_irreps(std::uint64_t p);

// Qhat(rho) = sum_g Q(g) rho(g).
template <class Group, class Element>
CMatrix fourier_transform(const GroupDistribution<Group>& q,
                          const Irrep<Element>& rho) {
  CMatrix hat(rho.dim);
  for (std::size_t i = 0; i < q.weights.size(); ++i) {
    const double w = q.weights[i];
    if (w == 0.0) continue;
    const CMatrix m = rho.evaluate(q.group.element(i));
    for (std::size_t e = 0; e < hat.a.size(); ++e) hat.a[e] += w * m.a[e];
  }
  return hat;
}

// f(s) = (1/|G|) sum_rho d_rho Tr(rho(s^{-1}) fhat_rho).
template <class Group, class Element>
std::vector<cplx> fourier_inversion(const Group& g,
                                    const std::vector<Irrep<Element>>& irreps,
                                    const std::vector<CMatrix>& hats) {
  if (irreps.size() != hats.size())
    throw std::invalid_argument("fourier_inversion: table size mismatch");
  std::vector<cplx> f(g.size(), cplx{0.0, 0.0});
  for (std::size_t s = 0; s < g.size(); ++s) {
    const auto s_inv = g.inverse(g.element(s));
    cplx total{0.0, 0.0};
    for (std::size_t r = 0; r < irreps.size(); ++r) {
      const CMatrix m = irreps[r].evaluate(s_inv);
      total += static_cast<double>(irreps[r].dim) *
               trace(multiply(m, hats[r]));
    }
    f[s] = total / static_cast<double>(g.size());
  }
  return f;
}

// ---------------------------------------------------------------------------
// Chi-square distances and mixing

// Plancherel chi-square of the Heisenberg walk after k steps:
//   sum_{(a,b) != 0} ((cos(2 pi a/p) + cos(2 pi b/p))/2)^{2k}
//     + sum_{a=1}^{p-1} p * sum_i lambda_i(M_p(a))^{2k}.
double heisenberg_chi_square(std::uint64_t p, std::uint64_t k);

// Same quantity for the affine walk:
//   sum_{alpha=1}^{p-2} (3/5 + (2/5) cos(2 pi alpha/(p-1)))^{2k}
//     + (p-1) * sum_i lambda_i(Qhat(rho))^{2k}.
double affine_chi_square_bound(std::uint64_t p, std::uint64_t k);

// Cauchy-Schwarz: TV(Q^{*k}, U) <= (1/2) sqrt(chi^2).
double tv_upper_from_chi_square(double chi_square);

// Smallest k with (1/2) sqrt(chi^2(k)) <= threshold; throws numerical_error
// past k_cap.
std::uint64_t affine_mixing_time(std::uint64_t p, double threshold,
                                 std::uint64_t k_cap = 1000000);

// Distance-curve rows for the CLI: exact TV is filled in when brute-force
// convolution is requested and feasible.
struct DistanceRow {
  std::uint64_t k = 0;
  double chi_square = 0.0;
  double tv_exact = 0.0;  // meaningful only when has_exact
  double tv_upper_bound = 0.0;
  bool has_exact = false;
};

std::vector<DistanceRow> heisenberg_distance_curve(std::uint64_t p,
                                                   std::uint64_t k_max,
                                                   bool include_exact);
std::vector<DistanceRow> affine_distance_curve(std::uint64_t p,
                                               std::uint64_t k_max,
                                               bool include_exact);

}  // namespace harper
