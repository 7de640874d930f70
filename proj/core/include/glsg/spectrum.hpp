#pragma once

#include <vector>

#include "glsg/graph.hpp"

namespace glsg {

inline constexpr double kDefaultJacobiTol = 1e-10;  // off-diagonal Frobenius norm target
inline constexpr int kJacobiSweepCap = 100;
inline constexpr double kDefaultClusterTol = 1e-6;

struct SpectralCluster {
  double value = 0.0;
  int multiplicity = 0;

  bool operator==(const SpectralCluster&) const = default;
};

struct Spectrum {
  std::vector<double> eigenvalues;        // ascending
  std::vector<SpectralCluster> clusters;  // ascending by value
  double energy = 0.0;                    // sum of |eigenvalue|
};

/// All eigenvalues of a dense symmetric matrix (row-major size*size) by
/// cyclic Jacobi rotations with threshold sweeps. Iterates until the
/// off-diagonal Frobenius norm drops below tol; ascending output. The input
/// must be exactly symmetric. Throws NoConvergence past kJacobiSweepCap
/// sweeps (not expected in practice; it signals a bug).
std::vector<double> eigenvalues_symmetric(std::vector<double> matrix, int size,
                                          double tol = kDefaultJacobiTol);

/// Greedy chain clustering of an ascending eigenvalue list: a value joins
/// the current cluster when it lies within tol of the previous value.
/// Cluster values are member means.
std::vector<SpectralCluster> cluster_eigenvalues(const std::vector<double>& ascending,
                                                 double tol = kDefaultClusterTol);

double graph_energy(const std::vector<double>& eigenvalues);

/// Dense 0/1 adjacency matrix of the graph, row-major.
std::vector<double> adjacency_matrix(const GlsgGraph& g);

Spectrum spectrum(const GlsgGraph& g, double cluster_tol = kDefaultClusterTol);

/// Spectrum of the graph of any null semigroup of order n, by the tensor
/// identification with the complete-graph square:
///   (n-1)^2 once, -(n-1) with multiplicity 2(n-1), 1 with multiplicity
///   (n-1)^2; energy 4(n-1)^2. Equal-valued clusters are merged (n = 2),
///   and n = 1 degenerates to the single eigenvalue 0.
Spectrum null_spectrum_closed_form(int n);

/// Spectrum of each connected component, in component order. Their multiset
/// union equals the whole-graph spectrum.
std::vector<Spectrum> block_spectra(const GlsgGraph& g,
                                    double cluster_tol = kDefaultClusterTol);

}  // namespace glsg
