// Copyright 2026 The pseudoturan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pseudoturan/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include <Eigen/Dense>
#include <lapacke.h>

#include "pseudoturan/random.hpp"

namespace pseudoturan {

namespace {

// Neumaier-compensated running sum.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

void sort_descending(std::vector<double>& v) {
  std::sort(v.begin(), v.end(), std::greater<>());
}

double regular_density_shift(const Graph& g) {
  const double n = static_cast<double>(g.n());
  return 2.0 * static_cast<double>(g.edge_count()) / (n * n);
}

Eigen::MatrixXd adjacency_matrix(const Graph& g, double shift) {
  const auto n = static_cast<Eigen::Index>(g.n());
  Eigen::MatrixXd a = Eigen::MatrixXd::Constant(n, n, -shift);
  for (auto [u, v] : g.edges()) {
    a(u, v) += 1.0;
    a(v, u) += 1.0;
  }
  return a;
}

// Ascending eigenvalues via divide and conquer. Eigen's QR iteration gives up
// on some highly degenerate Cayley spectra (n = 4096, GF(16) Kopparty).
std::vector<double> symmetric_eigenvalues(Eigen::MatrixXd a) {
  const auto n = static_cast<lapack_int>(a.rows());
  std::vector<double> w(static_cast<std::size_t>(n));
  const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'U', n, a.data(), n, w.data());
  if (info != 0) {
    fail(ErrorCode::kNoConvergence, "dsyevd returned " + std::to_string(info));
  }
  return w;
}

}  // namespace

std::string to_string(SpectralMethod m) {
  switch (m) {
    case SpectralMethod::kCharacterSum: return "character-sum";
    case SpectralMethod::kDenseNumeric: return "dense-numeric";
    case SpectralMethod::kIterative: return "iterative";
  }
  return "?";
}

double nontrivial_abs_max(const std::vector<double>& d) {
  if (d.size() < 2) return 0.0;
  return std::max(std::abs(d[1]), std::abs(d.back()));
}

bool same_spectrum(const std::vector<double>& a, const std::vector<double>& b,
                   double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

SpectralSummary cayley_spectrum(const CayleySpec& spec) {
  validate(spec);
  const std::size_t n = spec.group_order();
  const std::size_t k = spec.dims.size();
  std::uint64_t lcm = 1;
  for (auto d : spec.dims) lcm = std::lcm(lcm, std::uint64_t{d});
  std::vector<std::uint64_t> scale(k);
  for (std::size_t i = 0; i < k; ++i) scale[i] = lcm / spec.dims[i];

  // psi_a(s) = exp(2 pi i * phase / lcm) with an exact integer phase.
  const bool tabulate = lcm <= (std::uint64_t{1} << 22);
  std::vector<double> cos_t, sin_t;
  if (tabulate) {
    cos_t.resize(lcm);
    sin_t.resize(lcm);
    for (std::uint64_t j = 0; j < lcm; ++j) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) /
                           static_cast<double>(lcm);
      cos_t[j] = std::cos(angle);
      sin_t[j] = std::sin(angle);
    }
  }

  SpectralSummary out;
  out.method = SpectralMethod::kCharacterSum;
  out.eigenvalues.resize(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    const auto a = spec.element_at(idx);
    CompensatedSum re, im;
    for (const auto& s : spec.connection) {
      std::uint64_t phase = 0;
      for (std::size_t i = 0; i < k; ++i) {
        phase = (phase + (std::uint64_t{a[i]} * s[i] % spec.dims[i]) * scale[i]) % lcm;
      }
      if (tabulate) {
        re.add(cos_t[phase]);
        im.add(sin_t[phase]);
      } else {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(phase) /
                             static_cast<double>(lcm);
        re.add(std::cos(angle));
        im.add(std::sin(angle));
      }
    }
    out.eigenvalues[idx] = re.value();
    out.max_imaginary = std::max(out.max_imaginary, std::abs(im.value()));
  }
  sort_descending(out.eigenvalues);
  out.lambda1 = out.eigenvalues.front();
  out.lambda = nontrivial_abs_max(out.eigenvalues);
  out.tolerance = 1e-9;
  return out;
}

SpectralSummary spectrum_dense(const Graph& g, std::size_t cap) {
  if (g.n() > cap) {
    fail(ErrorCode::kTooLarge, "dense spectrum needs n <= " + std::to_string(cap));
  }
  SpectralSummary out;
  out.method = SpectralMethod::kDenseNumeric;
  out.tolerance = 1e-8 * static_cast<double>(std::max<std::size_t>(1, g.n()));
  if (g.n() == 0) return out;
  out.eigenvalues = symmetric_eigenvalues(adjacency_matrix(g, 0.0));
  sort_descending(out.eigenvalues);
  out.lambda1 = out.eigenvalues.front();
  out.lambda = nontrivial_abs_max(out.eigenvalues);
  return out;
}

double lambda_iterative(const Graph& g, double tol, std::size_t max_iterations) {
  const std::size_t n = g.n();
  if (n < 2) return 0.0;
  const double shift = regular_density_shift(g);
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.neighbors(v);

  auto apply = [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    const double total = x.sum();
    for (std::size_t v = 0; v < n; ++v) {
      double acc = 0.0;
      for (auto w : adj[v]) acc += x[w];
      y[static_cast<Eigen::Index>(v)] = acc - shift * total;
    }
  };

  const std::size_t krylov_cap = std::min<std::size_t>(n, 600);
  std::mt19937_64 rng(derive_seed(0x1a2c05, n));
  std::normal_distribution<double> normal;
  Eigen::VectorXd start(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < start.size(); ++i) start[i] = normal(rng);

  double estimate = 0.0;
  std::size_t used = 0;
  while (used < max_iterations) {
    std::vector<Eigen::VectorXd> basis;
    std::vector<double> alpha, beta;
    basis.push_back(start.normalized());
    Eigen::VectorXd w(static_cast<Eigen::Index>(n));
    double previous = -1.0;
    Eigen::VectorXd ritz_vector = basis.front();
    bool converged = false;
    for (std::size_t j = 0; j < krylov_cap && used < max_iterations; ++j, ++used) {
      apply(basis[j], w);
      const double a = basis[j].dot(w);
      alpha.push_back(a);
      // Full reorthogonalization, applied twice for stability.
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& b : basis) w -= b.dot(w) * b;
      }
      const double b = w.norm();

      const auto m = static_cast<Eigen::Index>(alpha.size());
      const bool last = j + 1 == krylov_cap || used + 1 == max_iterations;
      if ((j + 1) % 5 != 0 && !last && b >= 1e-12) {
        beta.push_back(b);
        basis.push_back(w / b);
        continue;
      }
      Eigen::VectorXd diag(m), sub(std::max<Eigen::Index>(m - 1, 0));
      for (Eigen::Index i = 0; i < m; ++i) diag[i] = alpha[static_cast<std::size_t>(i)];
      for (Eigen::Index i = 0; i + 1 < m; ++i) sub[i] = beta[static_cast<std::size_t>(i)];
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small;
      small.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
      if (small.info() != Eigen::Success) {
        fail(ErrorCode::kNoConvergence, "Lanczos tridiagonal eigensolve");
      }
      const auto& theta = small.eigenvalues();
      Eigen::Index arg = 0;
      for (Eigen::Index i = 1; i < m; ++i) {
        if (std::abs(theta[i]) > std::abs(theta[arg])) arg = i;
      }
      estimate = std::abs(theta[arg]);
      // Residual bound |beta_j * last component of the Ritz vector|.
      const double residual = b * std::abs(small.eigenvectors()(m - 1, arg));
      if (b < 1e-12 || residual <= tol * std::max(1.0, estimate) ||
          (previous >= 0.0 && std::abs(estimate - previous) <= tol * 1e-3 &&
           residual <= 10 * tol * std::max(1.0, estimate))) {
        converged = true;
        break;
      }
      previous = estimate;
      if (last) {
        ritz_vector.setZero();
        for (Eigen::Index i = 0; i < m; ++i) {
          ritz_vector += small.eigenvectors()(i, arg) * basis[static_cast<std::size_t>(i)];
        }
      }
      beta.push_back(b);
      basis.push_back(w / b);
    }
    if (converged) break;
    start = ritz_vector;
  }
  return estimate;
}

double lambda_nontrivial(const Graph& g, std::size_t dense_cap) {
  if (g.n() < 2) return 0.0;
  if (g.n() > dense_cap) return lambda_iterative(g);
  if (g.regular_degree()) return spectrum_dense(g, dense_cap).lambda;
  double best = 0.0;
  for (double e : symmetric_eigenvalues(adjacency_matrix(g, regular_density_shift(g)))) {
    best = std::max(best, std::abs(e));
  }
  return best;
}

JumbledReport jumbled_cert(const Graph& g) {
  const auto d = g.regular_degree();
  if (!d) {
    fail(ErrorCode::kIrregular,
         "degrees range over [" + std::to_string(g.min_degree()) + ", " +
             std::to_string(g.max_degree()) + "]; use sampled certificates");
  }
  JumbledReport report;
  report.degree = *d;
  report.cert.density = Rational(static_cast<std::int64_t>(*d),
                                 static_cast<std::int64_t>(std::max<std::size_t>(1, g.n())));
  report.cert.alpha = lambda_nontrivial(g);
  report.cert.provenance = CertProvenance::kEigenvalue;
  report.optimality_ratio =
      *d > 0 ? report.cert.alpha / std::sqrt(static_cast<double>(*d)) : 0.0;
  return report;
}

std::complex<double> cubic_character_sum(std::uint32_t p, std::uint32_t a1,
                                         std::uint32_t a2) {
  CompensatedSum re, im;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t phase = (a1 * x + a2 * (x * x % p * x % p)) % p;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(phase) / p;
    re.add(std::cos(angle));
    im.add(std::sin(angle));
  }
  return {re.value(), im.value()};
}

WeilAudit weil_audit(std::uint32_t p) {
  if (!is_prime(p) || p == 3) {
    fail(ErrorCode::kBadCharacteristic, "Weil audit needs a prime p != 3");
  }
  if (p > 200) fail(ErrorCode::kTooLarge, "Weil audit covers p <= 200");
  std::vector<double> cos_t(p), sin_t(p);
  for (std::uint32_t j = 0; j < p; ++j) {
    const double angle = 2.0 * std::numbers::pi * j / p;
    cos_t[j] = std::cos(angle);
    sin_t[j] = std::sin(angle);
  }
  std::vector<std::uint64_t> cube(p);
  for (std::uint64_t x = 0; x < p; ++x) cube[x] = x * x % p * x % p;

  WeilAudit audit;
  audit.p = p;
  audit.bound = 2.0 * std::sqrt(static_cast<double>(p));
  for (std::uint64_t a1 = 0; a1 < p; ++a1) {
    for (std::uint64_t a2 = 0; a2 < p; ++a2) {
      if (a1 == 0 && a2 == 0) continue;
      CompensatedSum re, im;
      for (std::uint64_t x = 0; x < p; ++x) {
        const auto phase = (a1 * x + a2 * cube[x]) % p;
        re.add(cos_t[phase]);
        im.add(sin_t[phase]);
      }
      const double mag = std::hypot(re.value(), im.value());
      if (mag > audit.max_abs) {
        audit.max_abs = mag;
        audit.arg_a1 = static_cast<std::uint32_t>(a1);
        audit.arg_a2 = static_cast<std::uint32_t>(a2);
      }
    }
  }
  audit.holds = audit.max_abs <= audit.bound;
  return audit;
}

}  // namespace pseudoturan
