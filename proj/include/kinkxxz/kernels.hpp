#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kinkxxz/sector_basis.hpp"
#include "kinkxxz/sparse.hpp"

namespace kinkxxz::kernels {

/// Row formula shared by every Hamiltonian variant:
///   diag(c)     = ising * E^k(c) + boundary * J (m_L - m_{-L})
///   <c'|H|c>    = -hopping/2 * sqrt(R)   for c' one hop away from c,
/// where R is the exact integer product of the two ladder radicands.
struct RowWeights {
  double ising = 0.0;
  double boundary = 0.0;
  double hopping = 0.0;
};

/// Reduction block length used by the deterministic reductions; results do
/// not depend on the thread count.
inline constexpr std::size_t kReduceBlock = 4096;

// Serial reference implementations. They walk the sector by successor,
// rank every neighbour from scratch and sum in natural order; tests compare
// the parallel kernels against them.
namespace serial {
CsrMatrix assemble(const SectorBasis& basis, const RowWeights& w);
std::vector<std::int64_t> ising_energies(const SectorBasis& basis);
void matvec(const CsrMatrix& a, std::span<const double> x, std::span<double> y);
double dot(std::span<const double> x, std::span<const double> y);
std::vector<double> log_amplitudes(const SectorBasis& basis, double log_q);
std::vector<double> site_magnetization(const SectorBasis& basis, std::span<const double> amplitudes);
}  // namespace serial

// OpenMP row-parallel kernels. Each row is produced by exactly one thread,
// neighbour ranks are updated incrementally from the two touched sites, and
// reductions go through fixed blocks, so output is bit-identical for any
// thread count.
namespace omp {
CsrMatrix assemble(const SectorBasis& basis, const RowWeights& w);
std::vector<std::int64_t> ising_energies(const SectorBasis& basis);
void matvec(const CsrMatrix& a, std::span<const double> x, std::span<double> y);
double dot(std::span<const double> x, std::span<const double> y);
double norm(std::span<const double> x);
/// y += alpha * x
void axpy(double alpha, std::span<const double> x, std::span<double> y);
void scale(double alpha, std::span<double> x);
std::vector<double> log_amplitudes(const SectorBasis& basis, double log_q);
std::vector<double> site_magnetization(const SectorBasis& basis, std::span<const double> amplitudes);
}  // namespace omp

}  // namespace kinkxxz::kernels
