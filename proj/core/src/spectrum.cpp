#include "glsg/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace glsg {

namespace {

double off_diagonal_squared(const std::vector<double>& a, int n) {
  double sum = 0.0;
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      sum += a[p * n + q] * a[p * n + q];
    }
  }
  return 2.0 * sum;
}

}  // namespace

std::vector<double> eigenvalues_symmetric(std::vector<double> a, int n, double tol) {
  if (n < 0 || a.size() != static_cast<std::size_t>(n) * n) {
    throw NonSymmetricError("matrix is not size*size");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (a[i * n + j] != a[j * n + i]) throw NonSymmetricError(i + 1, j + 1);
    }
  }
  if (n <= 1) return std::vector<double>(a.begin(), a.end());

  bool converged = false;
  for (int sweep = 0; sweep < kJacobiSweepCap; ++sweep) {
    const double off2 = off_diagonal_squared(a, n);
    if (std::sqrt(off2) < tol) {
      converged = true;
      break;
    }
    // threshold sweeps: skip small pivots during the first rounds so early
    // rotations go to the entries that matter
    const double thresh2 = sweep < 3 ? 0.2 * off2 / (static_cast<double>(n) * n) : 0.0;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0 || apq * apq <= thresh2) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        a[p * n + p] -= t * apq;
        a[q * n + q] += t * apq;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a[r * n + p];
          const double arq = a[r * n + q];
          a[r * n + p] = arp - s * (arq + tau * arp);
          a[p * n + r] = a[r * n + p];
          a[r * n + q] = arq + s * (arp - tau * arq);
          a[q * n + r] = a[r * n + q];
        }
      }
    }
  }
  if (!converged && std::sqrt(off_diagonal_squared(a, n)) >= tol) {
    throw NoConvergenceError(kJacobiSweepCap);
  }
  std::vector<double> eigenvalues(n);
  for (int i = 0; i < n; ++i) eigenvalues[i] = a[i * n + i];
  std::sort(eigenvalues.begin(), eigenvalues.end());
  return eigenvalues;
}

std::vector<SpectralCluster> cluster_eigenvalues(const std::vector<double>& ascending,
                                                 double tol) {
  std::vector<SpectralCluster> clusters;
  std::size_t start = 0;
  while (start < ascending.size()) {
    std::size_t end = start + 1;
    while (end < ascending.size() && ascending[end] - ascending[end - 1] <= tol) ++end;
    double sum = 0.0;
    for (std::size_t i = start; i < end; ++i) sum += ascending[i];
    clusters.push_back(SpectralCluster{sum / static_cast<double>(end - start),
                                       static_cast<int>(end - start)});
    start = end;
  }
  return clusters;
}

double graph_energy(const std::vector<double>& eigenvalues) {
  double energy = 0.0;
  for (double v : eigenvalues) energy += std::abs(v);
  return energy;
}

std::vector<double> adjacency_matrix(const GlsgGraph& g) {
  const int vcount = g.vertex_count();
  std::vector<double> m(static_cast<std::size_t>(vcount) * vcount, 0.0);
  for (int u = 0; u < vcount; ++u) {
    for (int v = 0; v < vcount; ++v) {
      if (u != v && g.adjacent(u, v)) m[static_cast<std::size_t>(u) * vcount + v] = 1.0;
    }
  }
  return m;
}

Spectrum spectrum(const GlsgGraph& g, double cluster_tol) {
  Spectrum s;
  s.eigenvalues = eigenvalues_symmetric(adjacency_matrix(g), g.vertex_count());
  s.clusters = cluster_eigenvalues(s.eigenvalues, cluster_tol);
  s.energy = graph_energy(s.eigenvalues);
  return s;
}

Spectrum null_spectrum_closed_form(int n) {
  Spectrum s;
  if (n == 1) {
    s.eigenvalues = {0.0};
    s.clusters = {SpectralCluster{0.0, 1}};
    s.energy = 0.0;
    return s;
  }
  const double top = static_cast<double>(n - 1) * (n - 1);
  std::vector<SpectralCluster> raw = {
      SpectralCluster{top, 1},
      SpectralCluster{-static_cast<double>(n - 1), 2 * (n - 1)},
      SpectralCluster{1.0, (n - 1) * (n - 1)},
  };
  std::sort(raw.begin(), raw.end(),
            [](const SpectralCluster& a, const SpectralCluster& b) { return a.value < b.value; });
  // merge clusters that landed on the same value (happens at n = 2)
  for (const SpectralCluster& c : raw) {
    if (!s.clusters.empty() && c.value == s.clusters.back().value) {
      s.clusters.back().multiplicity += c.multiplicity;
    } else {
      s.clusters.push_back(c);
    }
  }
  for (const SpectralCluster& c : s.clusters) {
    for (int r = 0; r < c.multiplicity; ++r) s.eigenvalues.push_back(c.value);
  }
  s.energy = 4.0 * (n - 1) * (n - 1);
  return s;
}

std::vector<Spectrum> block_spectra(const GlsgGraph& g, double cluster_tol) {
  std::vector<Spectrum> result;
  for (const std::vector<int>& component : connected_components(g)) {
    const int size = static_cast<int>(component.size());
    std::vector<double> m(static_cast<std::size_t>(size) * size, 0.0);
    for (int a = 0; a < size; ++a) {
      for (int b = 0; b < size; ++b) {
        if (a != b && g.adjacent(component[a], component[b])) {
          m[static_cast<std::size_t>(a) * size + b] = 1.0;
        }
      }
    }
    Spectrum s;
    s.eigenvalues = eigenvalues_symmetric(std::move(m), size);
    s.clusters = cluster_eigenvalues(s.eigenvalues, cluster_tol);
    s.energy = graph_energy(s.eigenvalues);
    result.push_back(std::move(s));
  }
  return result;
}

}  // namespace glsg
