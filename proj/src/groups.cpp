#include "harper/groups.hpp"

#include <algorithm>
#include <cmath>

#include "harper/eigen.hpp"
#include "harper/matrix.hpp"

namespace harper {
namespace {

constexpr std::size_t dense_enumeration_cap = 100000;

cplx root_of_unity(std::uint64_t numerator, std::uint64_t denominator) {
  return std::polar(1.0, 2.0 * pi * static_cast<double>(numerator % denominator) /
                             static_cast<double>(denominator));
}

// (base, weight) pairs with chi^2(k) = sum weight * base^k; base = value^2 of
// one spectral value of Qhat at a nontrivial irrep, weight = d_rho.
struct SpectralAtoms {
  std::vector<double> base;
  std::vector<double> weight;

  double chi_square(std::uint64_t k) const {
    double total = 0.0;
    for (std::size_t i = 0; i < base.size(); ++i)
      total += weight[i] * std::pow(base[i], static_cast<double>(k));
    return total;
  }
};

SpectralAtoms heisenberg_atoms(std::uint64_t p) {
  if (!is_prime(p) || p < 3)
    throw std::invalid_argument("heisenberg walk analysis needs prime p >= 3");
  SpectralAtoms atoms;
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b) {
      if (a == 0 && b == 0) continue;
      const double v = (std::cos(2.0 * pi * static_cast<double>(a) /
                                 static_cast<double>(p)) +
                        std::cos(2.0 * pi * static_cast<double>(b) /
                                 static_cast<double>(p))) /
                       2.0;
      atoms.base.push_back(v * v);
      atoms.weight.push_back(1.0);
    }
  for (std::uint64_t a = 1; a < p; ++a) {
    const auto eig = dense_hermitian_eigen(
        to_dense(build_harper(static_cast<std::size_t>(p),
                              static_cast<std::size_t>(a))),
        false);
    for (double lam : eig.values) {
      atoms.base.push_back(lam * lam);
      atoms.weight.push_back(static_cast<double>(p));
    }
  }
  return atoms;
}

SpectralAtoms affine_atoms(std::uint64_t p) {
  if (!is_prime(p) || p < 3)
    throw std::invalid_argument("affine walk analysis needs prime p >= 3");
  SpectralAtoms atoms;
  const double order = static_cast<double>(p - 1);
  for (std::uint64_t alpha = 1; alpha + 1 < p; ++alpha) {
    const double v =
        0.6 + 0.4 * std::cos(2.0 * pi * static_cast<double>(alpha) / order);
    atoms.base.push_back(v * v);
    atoms.weight.push_back(1.0);
  }
  // Spectrum of Qhat at the (p-1)-dimensional irrep, assembled from the
  // representation itself (works for every odd prime, including p = 3 where
  // the +-1 circulant offsets coincide).
  const auto irreps = affine_irreps(p);
  const Irrep<AffineElement>& rho = irreps.back();
  const AffineGroup group(p);
  const std::uint64_t g = group.generator();
  const std::vector<AffineElement> steps = {
      {1, 0}, {1, 1}, {1, p - 1}, {g, 0}, {power_mod(g, p - 2, p), 0}};
  CMatrix hat(rho.dim);
  for (const auto& s : steps) {
    const CMatrix m = rho.evaluate(s);
    for (std::size_t e = 0; e < hat.a.size(); ++e) hat.a[e] += 0.2 * m.a[e];
  }
  DenseHermitian dense(rho.dim);
  dense.a = hat.a;
  const auto eig = dense_hermitian_eigen(dense, false);
  for (double lam : eig.values) {
    atoms.base.push_back(lam * lam);
    atoms.weight.push_back(static_cast<double>(p - 1));
  }
  return atoms;
}

template <class Group>
std::vector<DistanceRow> distance_curve(const SpectralAtoms& atoms,
                                        const GroupDistribution<Group>& step,
                                        std::uint64_t k_max,
                                        bool include_exact) {
  std::vector<DistanceRow> rows;
  rows.reserve(k_max);
  GroupDistribution<Group> walked = step;
  const auto uniform = uniform_distribution(step.group);
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    DistanceRow row;
    row.k = k;
    row.chi_square = atoms.chi_square(k);
    row.tv_upper_bound = tv_upper_from_chi_square(row.chi_square);
    if (include_exact) {
      if (k > 1) walked = convolve(walked, step);
      row.tv_exact = tv_distance(walked, uniform);
      row.has_exact = true;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

// ---------------------------------------------------------------------------
// Groups

HeisenbergGroup::HeisenbergGroup(std::uint64_t n) : n_(n) {
  if (n < 2) throw std::invalid_argument("HeisenbergGroup: need n >= 2");
  if (n * n * n > dense_enumeration_cap)
    throw std::invalid_argument(
        "HeisenbergGroup: n^3 exceeds the dense-enumeration cap 1e5");
}

HeisenbergElement HeisenbergGroup::mul(const HeisenbergElement& g1,
                                       const HeisenbergElement& g2) const {
  return {(g1.x + g2.x) % n_, (g1.y + g2.y) % n_,
          (g1.z + g2.z + g1.x * g2.y) % n_};
}

HeisenbergElement HeisenbergGroup::inverse(const HeisenbergElement& g) const {
  return {(n_ - g.x % n_) % n_, (n_ - g.y % n_) % n_,
          ((n_ - g.z % n_) % n_ + g.x * g.y) % n_};
}

std::size_t HeisenbergGroup::index(const HeisenbergElement& g) const {
  return static_cast<std::size_t>((g.x % n_) * n_ * n_ + (g.y % n_) * n_ +
                                  g.z % n_);
}

HeisenbergElement HeisenbergGroup::element(std::size_t idx) const {
  const std::uint64_t i = idx;
  return {i / (n_ * n_), (i / n_) % n_, i % n_};
}

AffineGroup::AffineGroup(std::uint64_t p) : p_(p), g_(0) {
  if (!is_prime(p)) throw std::invalid_argument("AffineGroup: p must be prime");
  if (p * (p - 1) > dense_enumeration_cap)
    throw std::invalid_argument(
        "AffineGroup: p(p-1) exceeds the dense-enumeration cap 1e5");
  g_ = smallest_primitive_root(p);
}

AffineElement AffineGroup::mul(const AffineElement& g1,
                               const AffineElement& g2) const {
  return {(g1.a * g2.a) % p_, (g1.a * g2.b + g1.b) % p_};
}

AffineElement AffineGroup::inverse(const AffineElement& g) const {
  const std::uint64_t a_inv = power_mod(g.a, p_ - 2, p_);
  return {a_inv, (p_ - (a_inv * g.b) % p_) % p_};
}

std::size_t AffineGroup::index(const AffineElement& g) const {
  if (g.a % p_ == 0)
    throw std::invalid_argument("AffineGroup: element with a = 0");
  return static_cast<std::size_t>((g.a % p_ - 1) * p_ + g.b % p_);
}

AffineElement AffineGroup::element(std::size_t idx) const {
  const std::uint64_t i = idx;
  return {i / p_ + 1, i % p_};
}

// ---------------------------------------------------------------------------
// Step distributions

GroupDistribution<HeisenbergGroup> heisenberg_step_distribution(
    std::uint64_t n) {
  HeisenbergGroup group(n);
  GroupDistribution<HeisenbergGroup> d{
      group, std::vector<double>(group.size(), 0.0)};
  const HeisenbergElement steps[4] = {
      {1, 0, 0}, {n - 1, 0, 0}, {0, 1, 0}, {0, n - 1, 0}};
  for (const auto& s : steps) d.weights[group.index(s)] += 0.25;
  return d;
}

GroupDistribution<AffineGroup> affine_step_distribution(std::uint64_t p) {
  AffineGroup group(p);
  GroupDistribution<AffineGroup> d{group,
                                   std::vector<double>(group.size(), 0.0)};
  const std::uint64_t g = group.generator();
  const AffineElement steps[5] = {
      {1, 0}, {1, 1}, {1, p - 1}, {g, 0}, {power_mod(g, p - 2, p), 0}};
  for (const auto& s : steps) d.weights[group.index(s)] += 0.2;
  return d;
}

// ---------------------------------------------------------------------------
// Matrices

CMatrix multiply(const CMatrix& lhs, const CMatrix& rhs) {
  if (lhs.d != rhs.d) throw std::invalid_argument("multiply: size mismatch");
  CMatrix out(lhs.d);
  for (std::size_t i = 0; i < lhs.d; ++i)
    for (std::size_t k = 0; k < lhs.d; ++k) {
      const cplx lik = lhs.at(i, k);
      if (lik == cplx{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < lhs.d; ++j) out.at(i, j) += lik * rhs.at(k, j);
    }
  return out;
}

double frobenius_norm_sq(const CMatrix& m) {
  double total = 0.0;
  for (const cplx& v : m.a) total += std::norm(v);
  return total;
}

cplx trace(const CMatrix& m) {
  cplx total{0.0, 0.0};
  for (std::size_t i = 0; i < m.d; ++i) total += m.at(i, i);
  return total;
}

// ---------------------------------------------------------------------------
// Irrep tables

std::vector<Irrep<HeisenbergElement>> heisenberg_irreps(std::uint64_t p) {
  if (!is_prime(p))
    throw std::invalid_argument("heisenberg_irreps: p must be prime");
  HeisenbergGroup group(p);  // enforces the size cap
  std::vector<Irrep<HeisenbergElement>> table;
  table.reserve(static_cast<std::size_t>(p * p + p - 1));
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b) {
      Irrep<HeisenbergElement> chi;
      chi.label = "chi_" + std::to_string(a) + "_" + std::to_string(b);
      chi.dim = 1;
      chi.evaluate = [a, b, p](const HeisenbergElement& g) {
        CMatrix m(1);
        m.at(0, 0) = root_of_unity(a * g.x + b * g.y, p);
        return m;
      };
      table.push_back(std::move(chi));
    }
  for (std::uint64_t a = 1; a < p; ++a) {
    Irrep<HeisenbergElement> rho;
    rho.label = "rho_" + std::to_string(a);
    rho.dim = static_cast<std::size_t>(p);
    // rho_a(x,y,z) f(t) = w^{a(z+yt)} f(t+x): column s maps to row t = s-x.
    rho.evaluate = [a, p](const HeisenbergElement& g) {
      CMatrix m(static_cast<std::size_t>(p));
      for (std::uint64_t s = 0; s < p; ++s) {
        const std::uint64_t t = (s + p - g.x % p) % p;
        m.at(static_cast<std::size_t>(t), static_cast<std::size_t>(s)) =
            root_of_unity(a * (g.z + g.y * t), p);
      }
      return m;
    };
    table.push_back(std::move(rho));
  }
  return table;
}

std::vector<Irrep<AffineElement>> affine_irreps(std::uint64_t p) {
  if (!is_prime(p) || p < 3)
    throw std::invalid_argument("affine_irreps: p must be an odd prime");
  AffineGroup group(p);  // enforces the size cap
  const std::uint64_t g = group.generator();

  // Discrete-log table base g and the power table g^m.
  std::vector<std::uint64_t> dlog(p, 0);
  std::vector<std::uint64_t> gpow(p - 1, 1);
  std::uint64_t acc = 1;
  for (std::uint64_t m = 0; m + 1 < p; ++m) {
    gpow[m] = acc;
    dlog[acc] = m;
    acc = (acc * g) % p;
  }

  std::vector<Irrep<AffineElement>> table;
  table.reserve(static_cast<std::size_t>(p));
  for (std::uint64_t alpha = 0; alpha + 1 < p; ++alpha) {
    Irrep<AffineElement> chi;
    chi.label = "chi_" + std::to_string(alpha);
    chi.dim = 1;
    chi.evaluate = [alpha, dlog, p](const AffineElement& e) {
      CMatrix m(1);
      m.at(0, 0) = root_of_unity(alpha * dlog[e.a % p], p - 1);
      return m;
    };
    table.push_back(std::move(chi));
  }
  Irrep<AffineElement> rho;
  rho.label = "rho";
  rho.dim = static_cast<std::size_t>(p - 1);
  // rho(a,b) f(j) = w^{jb} f(aj) in the basis delta_{g^m}: column m maps to
  // row (m - s) mod (p-1) with s = dlog a, carrying the phase w^{g^{m-s} b}.
  rho.evaluate = [dlog, gpow, p](const AffineElement& e) {
    const std::uint64_t order = p - 1;
    const std::uint64_t s = dlog[e.a % p];
    CMatrix m(static_cast<std::size_t>(order));
    for (std::uint64_t col = 0; col < order; ++col) {
      const std::uint64_t row = (col + order - s) % order;
      m.at(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) =
          root_of_unity(gpow[row] * (e.b % p), p);
    }
    return m;
  };
  table.push_back(std::move(rho));
  return table;
}

// ---------------------------------------------------------------------------
// Chi-square and mixing

double heisenberg_chi_square(std::uint64_t p, std::uint64_t k) {
  if (k < 1) throw std::invalid_argument("heisenberg_chi_square: need k >= 1");
  return heisenberg_atoms(p).chi_square(k);
}

double affine_chi_square_bound(std::uint64_t p, std::uint64_t k) {
  if (k < 1)
    throw std::invalid_argument("affine_chi_square_bound: need k >= 1");
  return affine_atoms(p).chi_square(k);
}

double tv_upper_from_chi_square(double chi_square) {
  if (!(chi_square >= 0.0))
    throw std::domain_error("tv_upper_from_chi_square: negative chi-square");
  return 0.5 * std::sqrt(chi_square);
}

std::uint64_t affine_mixing_time(std::uint64_t p, double threshold,
                                 std::uint64_t k_cap) {
  if (!(threshold > 0.0))
    throw std::invalid_argument("affine_mixing_time: need threshold > 0");
  const SpectralAtoms atoms = affine_atoms(p);
  const double chi_target = 4.0 * threshold * threshold;
  std::vector<double> powers = atoms.base;  // base^k, starting at k = 1
  for (std::uint64_t k = 1; k <= k_cap; ++k) {
    double chi = 0.0;
    for (std::size_t i = 0; i < powers.size(); ++i)
      chi += atoms.weight[i] * powers[i];
    if (chi <= chi_target) return k;
    for (std::size_t i = 0; i < powers.size(); ++i) powers[i] *= atoms.base[i];
  }
  throw numerical_error("affine_mixing_time: threshold not reached by k_cap");
}

std::vector<DistanceRow> heisenberg_distance_curve(std::uint64_t p,
                                                   std::uint64_t k_max,
                                                   bool include_exact) {
  const SpectralAtoms atoms = heisenberg_atoms(p);
  return distance_curve(atoms, heisenberg_step_distribution(p), k_max,
                        include_exact);
}

std::vector<DistanceRow> affine_distance_curve(std::uint64_t p,
                                               std::uint64_t k_max,
                                               bool include_exact) {
  const SpectralAtoms atoms = affine_atoms(p);
  return distance_curve(atoms, affine_step_distribution(p), k_max,
                        include_exact);
}

}  // namespace harper
