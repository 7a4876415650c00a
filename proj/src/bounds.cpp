#include "harper/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "harper/dft.hpp"
#include "harper/eigen.hpp"

namespace harper {

namespace {

IndexSet canonical_set(IndexSet s, std::size_t n, const char* name) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (!s.empty() && s.back() >= n)
    throw std::invalid_argument(std::string(name) +
                                ": index set contains an entry >= n");
  return s;
}

void require_unit(const std::vector<cplx>& z) {
  double n2 = 0.0;
  for (const cplx& x : z) n2 += std::norm(x);
  if (std::abs(std::sqrt(n2) - 1.0) > 1e-10)
    throw std::invalid_argument(
        "expected a unit vector (norm differs from 1 by more than 1e-10)");
}

double offset_norm(const std::vector<cplx>& z, const IndexSet& s_sorted) {
  std::vector<bool> in(z.size(), false);
  for (std::size_t i : s_sorted) in[i] = true;
  double acc = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i)
    if (!in[i]) acc += std::norm(z[i]);
  return std::sqrt(acc);
}

// ẑ = û/√n with the e^{-2πi} analysis kernel; unit whenever z is unit.
std::vector<cplx> unit_transform(const std::vector<cplx>& z) {
  std::vector<cplx> zh = dft_forward(z);
  const double s = 1.0 / std::sqrt(static_cast<double>(z.size()));
  for (cplx& x : zh) x *= s;
  return zh;
}

// descending spectra of the two summands
struct SummandSpectra {
  std::vector<double> c;  // circulant symbol values, descending
  std::vector<double> d;  // diagonal entries, descending
};

SummandSpectra summand_spectra(const HermitianCirculant& c,
                               const RealDiagonal& d) {
  if (c.n() != d.n())
    throw std::invalid_argument(
        "bounds: circulant and diagonal sizes do not match");
  SummandSpectra s;
  s.c = circulant_eigendecomposition(c).values;
  s.d = d.entries;
  std::sort(s.d.begin(), s.d.end(), std::greater<double>());
  return s;
}

BoundReport bound_from_spectra(const SummandSpectra& s, std::size_t k,
                               std::size_t k_prime, bool improved) {
  const std::size_t n = s.c.size();
  if (k < 1 || k_prime < 1 || k > n - 1 || k_prime > n - 1)
    throw std::invalid_argument(
        "bounds: k and k' must lie in [1, n-1]");
  if (k * k_prime >= n)
    throw std::domain_error("bounds: k·k' must be smaller than n");
  const double a = s.d[0] - s.d[k];        // λ₁(D) − λ_{k+1}(D)
  const double b = s.c[0] - s.c[k_prime];  // λ₁(C) − λ_{k′+1}(C)
  const double shape =
      1.0 - std::sqrt(static_cast<double>(k * k_prime) / static_cast<double>(n));
  const double shape2 = shape * shape;
  BoundReport r;
  r.variant = improved ? "improved" : "theorem1";
  r.k = k;
  r.k_prime = k_prime;
  r.weyl_term = s.c[0] + s.d[0];
  if (improved)
    r.correction = (a + b > 0.0) ? (a * b / (a + b)) * shape2 : 0.0;
  else
    r.correction = 0.5 * std::min(a, b) * shape2;
  r.bound = r.weyl_term - r.correction;
  return r;
}

}  // namespace

double concentration_defect(const std::vector<cplx>& z, const IndexSet& s) {
  require_unit(z);
  return offset_norm(z, canonical_set(s, z.size(), "concentration_defect"));
}

DonohoStarkResult donoho_stark_holds(const std::vector<cplx>& z,
                                     const IndexSet& s, const IndexSet& t) {
  require_unit(z);
  const std::size_t n = z.size();
  DonohoStarkResult res;
  res.report.set_s = canonical_set(s, n, "donoho_stark_holds(S)");
  res.report.set_t = canonical_set(t, n, "donoho_stark_holds(T)");
  res.report.eps_s = offset_norm(z, res.report.set_s);
  res.report.eps_t = offset_norm(unit_transform(z), res.report.set_t);
  res.lhs = static_cast<double>(res.report.set_s.size()) *
            static_cast<double>(res.report.set_t.size());
  const double slack =
      std::max(0.0, 1.0 - (res.report.eps_s + res.report.eps_t));
  res.rhs = static_cast<double>(n) * slack * slack;
  res.holds = res.lhs >= res.rhs - 1e-12;
  return res;
}

std::pair<double, double> corollary_defect_bound(const std::vector<cplx>& z,
                                                 const IndexSet& s,
                                                 const IndexSet& t) {
  require_unit(z);
  const std::size_t n = z.size();
  const IndexSet ss = canonical_set(s, n, "corollary_defect_bound(S)");
  const IndexSet tt = canonical_set(t, n, "corollary_defect_bound(T)");
  if (ss.size() * tt.size() >= n)
    throw std::domain_error(
        "corollary_defect_bound: requires |S||T| < n");
  const double ds = offset_norm(z, ss);
  const double dt = offset_norm(unit_transform(z), tt);
  const double lhs = ds * ds + dt * dt;
  const double root = 1.0 - std::sqrt(static_cast<double>(ss.size() * tt.size()) /
                                      static_cast<double>(n));
  return {lhs, 0.5 * root * root};
}

BoundReport theorem1_bound(const HermitianCirculant& c, const RealDiagonal& d,
                           std::size_t k, std::size_t k_prime) {
  return bound_from_spectra(summand_spectra(c, d), k, k_prime, false);
}

BoundReport improved_bound(const HermitianCirculant& c, const RealDiagonal& d,
                           std::size_t k, std::size_t k_prime) {
  return bound_from_spectra(summand_spectra(c, d), k, k_prime, true);
}

BoundReport smallest_eigenvalue_bound(const HermitianCirculant& c,
                                      const RealDiagonal& d, std::size_t l,
                                      std::size_t l_prime) {
  SummandSpectra s = summand_spectra(c, d);
  const std::size_t n = s.c.size();
  if (l < 1 || l_prime < 1 || l > n - 1 || l_prime > n - 1)
    throw std::invalid_argument(
        "smallest_eigenvalue_bound: l and l' must lie in [1, n-1]");
  if (l * l_prime >= n)
    throw std::domain_error(
        "smallest_eigenvalue_bound: l·l' must be smaller than n");
  // gaps measured from the bottom of each spectrum
  const double a = s.d[n - 1 - l] - s.d[n - 1];        // λ_{n−l}(D) − λ_n(D)
  const double b = s.c[n - 1 - l_prime] - s.c[n - 1];  // λ_{n−l′}(C) − λ_n(C)
  const double shape =
      1.0 - std::sqrt(static_cast<double>(l * l_prime) / static_cast<double>(n));
  BoundReport r;
  r.variant = "smallest";
  r.k = l;
  r.k_prime = l_prime;
  r.weyl_term = s.c[n - 1] + s.d[n - 1];
  r.correction = 0.5 * std::min(a, b) * shape * shape;
  r.bound = r.weyl_term + r.correction;
  return r;
}

BoundReport optimize_bound(const HermitianCirculant& c, const RealDiagonal& d,
                           const std::string& variant) {
  if (variant != "theorem1" && variant != "improved")
    throw std::invalid_argument(
        "optimize_bound: variant must be theorem1 or improved");
  const bool improved = (variant == "improved");
  SummandSpectra s = summand_spectra(c, d);
  const std::size_t n = s.c.size();
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  std::vector<std::pair<std::size_t, std::size_t>> grid;
  for (int ci = 1; ci <= 9; ++ci)
    for (int cj = 1; cj <= 9; ++cj) {
      const std::size_t k =
          static_cast<std::size_t>(std::floor(0.1 * ci * sqrt_n));
      const std::size_t kp =
          static_cast<std::size_t>(std::floor(0.1 * cj * sqrt_n));
      if (k >= 1 && kp >= 1 && k * kp < n) grid.emplace_back(k, kp);
    }
  for (std::size_t k = 1; k * k < n; ++k) grid.emplace_back(k, k);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  bool have = false;
  BoundReport best;
  for (const auto& [k, kp] : grid) {
    BoundReport r = bound_from_spectra(s, k, kp, improved);
    if (!have || r.bound < best.bound) {
      best = r;
      have = true;
    }
  }
  if (!have)
    throw std::domain_error("optimize_bound: no admissible (k, k') exists");
  return best;
}

}  // namespace harper
