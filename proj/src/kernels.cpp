#include "kinkxxz/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "kinkxxz/spin_algebra.hpp"

namespace kinkxxz {

double CsrMatrix::entry(std::uint64_t i, std::uint64_t j) const {
  if (i >= rows || j >= rows) throw std::out_of_range("CsrMatrix::entry index out of range");
  auto first = cols.begin() + row_ptr[i];
  auto last = cols.begin() + row_ptr[i + 1];
  auto it = std::lower_bound(first, last, static_cast<std::int32_t>(j));
  if (it == last || *it != static_cast<std::int32_t>(j)) return 0.0;
  return values[static_cast<std::size_t>(it - cols.begin())];
}

double CsrMatrix::inf_norm() const {
  double best = 0.0;
  for (std::uint64_t i = 0; i < rows; ++i) {
    double s = 0.0;
    for (auto p = row_ptr[i]; p < row_ptr[i + 1]; ++p) s += std::abs(values[p]);
    best = std::max(best, s);
  }
  return best;
}

bool CsrMatrix::is_diagonal() const {
  for (std::uint64_t i = 0; i < rows; ++i)
    for (auto p = row_ptr[i]; p < row_ptr[i + 1]; ++p)
      if (static_cast<std::uint64_t>(cols[p]) != i && values[p] != 0.0) return false;
  return true;
}

Eigen::MatrixXd CsrMatrix::to_dense() const {
  const auto n = static_cast<Eigen::Index>(rows);
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (std::uint64_t i = 0; i < rows; ++i)
    for (auto p = row_ptr[i]; p < row_ptr[i + 1]; ++p) d(static_cast<Eigen::Index>(i), cols[p]) = values[p];
  return d;
}

namespace kernels {

namespace {

constexpr std::uint64_t kRowChunk = 1024;

void check_index_width(const SectorBasis& basis) {
  if (basis.dim() > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max()))
    throw std::overflow_error("sector " + basis.key().to_string() + " too large for 32-bit column indices");
}

struct Entry {
  std::int32_t col;
  double value;
};

/// Everything one row of the Hamiltonian needs, computed from its quanta.
/// Returns the number of entries written to `out` (diagonal included).
int emit_row(const SectorBasis& basis, const RowWeights& w, std::uint64_t row, std::span<const int> k,
             std::span<int> rem, std::span<Entry> out) {
  const int n = basis.sites();
  const int tj = basis.two_j();
  const double spin = 0.5 * tj;

  std::int64_t ising = 0;
  for (int p = 0; p + 1 < n; ++p) ising += static_cast<std::int64_t>(tj - k[p]) * k[p + 1];
  const double diag = w.ising * static_cast<double>(ising) + w.boundary * (spin * (k[0] - k[n - 1]));

  int count = 0;
  out[count++] = {static_cast<std::int32_t>(row), diag};
  if (w.hopping == 0.0) return count;

  rem[0] = basis.total_quanta();
  for (int p = 0; p < n; ++p) rem[p + 1] = rem[p] - k[p];

  for (int p = 0; p + 1 < n; ++p) {
    const int a = k[p];
    const int b = k[p + 1];
    const int r = rem[p];
    const std::uint64_t base = basis.offset(p, r, a) + basis.offset(p + 1, r - a, b);
    // S+_p S-_{p+1}: quanta move right
    if (a >= 1 && b <= tj - 1) {
      const std::int64_t radicand = static_cast<std::int64_t>(a) * (tj - a + 1) * (tj - b) * (b + 1);
      const std::uint64_t col = row - base + basis.offset(p, r, a - 1) + basis.offset(p + 1, r - a + 1, b + 1);
      out[count++] = {static_cast<std::int32_t>(col), -0.5 * w.hopping * std::sqrt(static_cast<double>(radicand))};
    }
    // S-_p S+_{p+1}: quanta move left
    if (a <= tj - 1 && b >= 1) {
      const std::int64_t radicand = static_cast<std::int64_t>(tj - a) * (a + 1) * b * (tj - b + 1);
      const std::uint64_t col = row - base + basis.offset(p, r, a + 1) + basis.offset(p + 1, r - a - 1, b - 1);
      out[count++] = {static_cast<std::int32_t>(col), -0.5 * w.hopping * std::sqrt(static_cast<double>(radicand))};
    }
  }
  std::sort(out.begin(), out.begin() + count, [](const Entry& x, const Entry& y) { return x.col < y.col; });
  return count;
}

/// Calls f(row, quanta) for rows [begin, end) by successor walk.
template <class F>
void walk_rows(const SectorBasis& basis, std::uint64_t begin, std::uint64_t end, std::vector<int>& k, F&& f) {
  if (begin >= end) return;
  basis.unrank_quanta(begin, k);
  for (std::uint64_t row = begin;;) {
    f(row, std::span<const int>(k));
    if (++row == end) break;
    basis.next_quanta(k);
  }
}

std::uint64_t chunk_count(std::uint64_t dim) { return (dim + kRowChunk - 1) / kRowChunk; }

double half_log_binom(int n, int k) {
  return 0.5 * (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

}  // namespace

// ---------------------------------------------------------------- serial ---

namespace serial {

CsrMatrix assemble(const SectorBasis& basis, const RowWeights& w) {
  check_index_width(basis);
  const int n = basis.sites();
  const HalfInt spin = basis.spin();
  CsrMatrix a;
  a.rows = basis.dim();
  a.row_ptr.assign(1, 0);

  std::vector<int> k(static_cast<std::size_t>(n));
  std::vector<int> nb(k.size());
  std::vector<Entry> row;
  basis.unrank_quanta(0, k);
  std::uint64_t i = 0;
  do {
    row.clear();
    double ising = 0.0;
    for (int p = 0; p + 1 < n; ++p) {
      const HalfInt m = spin - HalfInt::from_int(k[p]);
      const HalfInt mr = spin - HalfInt::from_int(k[p + 1]);
      ising += ((spin + m).value()) * ((spin - mr).value());
    }
    const double boundary = spin.value() * ((spin - HalfInt::from_int(k[n - 1])) - (spin - HalfInt::from_int(k[0]))).value();
    row.push_back({static_cast<std::int32_t>(i), w.ising * ising + w.boundary * boundary});

    if (w.hopping != 0.0) {
      for (int p = 0; p + 1 < n; ++p) {
        const HalfInt m = spin - HalfInt::from_int(k[p]);
        const HalfInt mr = spin - HalfInt::from_int(k[p + 1]);
        for (int dir : {+1, -1}) {
          // dir=+1: S+ on p, S- on p+1
          const Ladder left = dir > 0 ? Ladder::up : Ladder::down;
          const Ladder right = dir > 0 ? Ladder::down : Ladder::up;
          const std::int64_t r = ladder_radicand(spin, m, left) * ladder_radicand(spin, mr, right);
          if (r == 0) continue;
          nb = k;
          nb[p] -= dir;
          nb[p + 1] += dir;
          const std::uint64_t j = basis.rank_quanta(nb);
          row.push_back({static_cast<std::int32_t>(j), -0.5 * w.hopping * std::sqrt(static_cast<double>(r))});
        }
      }
    }
    std::sort(row.begin(), row.end(), [](const Entry& x, const Entry& y) { return x.col < y.col; });
    for (const auto& e : row) {
      a.cols.push_back(e.col);
      a.values.push_back(e.value);
    }
    a.row_ptr.push_back(static_cast<std::int64_t>(a.cols.size()));
    ++i;
  } while (basis.next_quanta(k));
  return a;
}

std::vector<std::int64_t> ising_energies(const SectorBasis& basis) {
  const int n = basis.sites();
  const HalfInt spin = basis.spin();
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(basis.dim()));
  for (const IsingConfig& c : basis.members()) {
    std::int64_t e = 0;
    for (int p = 0; p + 1 < n; ++p)
      e += (spin + c.values()[p]).twice() * (spin - c.values()[p + 1]).twice() / 4;
    out.push_back(e);
  }
  return out;
}

void matvec(const CsrMatrix& a, std::span<const double> x, std::span<double> y) {
  for (std::uint64_t i = 0; i < a.rows; ++i) {
    double s = 0.0;
    for (auto p = a.row_ptr[i]; p < a.row_ptr[i + 1]; ++p) s += a.values[p] * x[a.cols[p]];
    y[i] = s;
  }
}

double dot(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

std::vector<double> log_amplitudes(const SectorBasis& basis, double log_q) {
  const int L = basis.length();
  const int tj = basis.two_j();
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(basis.dim()));
  for (const IsingConfig& c : basis.members()) {
    double s = 0.0;
    const auto k = c.quanta();
    for (int alpha = -L; alpha <= L; ++alpha) {
      const int q = k[static_cast<std::size_t>(alpha + L)];
      s += half_log_binom(tj, q) + static_cast<double>(alpha) * q * log_q;
    }
    out.push_back(s);
  }
  return out;
}

std::vector<double> site_magnetization(const SectorBasis& basis, std::span<const double> amplitudes) {
  std::vector<double> prof(static_cast<std::size_t>(basis.sites()), 0.0);
  std::uint64_t i = 0;
  for (const IsingConfig& c : basis.members()) {
    const double w = amplitudes[i] * amplitudes[i];
    for (int p = 0; p < basis.sites(); ++p) prof[p] += w * c.values()[p].value();
    ++i;
  }
  return prof;
}

}  // namespace serial

// ------------------------------------------------------------------ omp ---

namespace omp {

CsrMatrix assemble(const SectorBasis& basis, const RowWeights& w) {
  check_index_width(basis);
  const std::uint64_t dim = basis.dim();
  const int n = basis.sites();
  const std::uint64_t chunks = chunk_count(dim);
  const std::size_t max_row = static_cast<std::size_t>(2 * (n - 1) + 1);

  CsrMatrix a;
  a.rows = dim;
  a.row_ptr.assign(dim + 1, 0);

  // pass 1: row lengths
#pragma omp parallel
  {
    std::vector<int> k(static_cast<std::size_t>(n)), rem(static_cast<std::size_t>(n + 1));
    std::vector<Entry> buf(max_row);
#pragma omp for schedule(dynamic, 4)
    for (std::uint64_t c = 0; c < chunks; ++c) {
      const std::uint64_t begin = c * kRowChunk;
      walk_rows(basis, begin, std::min(dim, begin + kRowChunk), k, [&](std::uint64_t row, std::span<const int> q) {
        a.row_ptr[row + 1] = emit_row(basis, w, row, q, rem, buf);
      });
    }
  }
  for (std::uint64_t i = 0; i < dim; ++i) a.row_ptr[i + 1] += a.row_ptr[i];
  a.cols.resize(static_cast<std::size_t>(a.row_ptr[dim]));
  a.values.resize(a.cols.size());

  // pass 2: fill
#pragma omp parallel
  {
    std::vector<int> k(static_cast<std::size_t>(n)), rem(static_cast<std::size_t>(n + 1));
    std::vector<Entry> buf(max_row);
#pragma omp for schedule(dynamic, 4)
    for (std::uint64_t c = 0; c < chunks; ++c) {
      const std::uint64_t begin = c * kRowChunk;
      walk_rows(basis, begin, std::min(dim, begin + kRowChunk), k, [&](std::uint64_t row, std::span<const int> q) {
        const int cnt = emit_row(basis, w, row, q, rem, buf);
        auto at = static_cast<std::size_t>(a.row_ptr[row]);
        for (int e = 0; e < cnt; ++e) {
          a.cols[at + e] = buf[e].col;
          a.values[at + e] = buf[e].value;
        }
      });
    }
  }
  return a;
}

std::vector<std::int64_t> ising_energies(const SectorBasis& basis) {
  const std::uint64_t dim = basis.dim();
  const int n = basis.sites();
  const int tj = basis.two_j();
  std::vector<std::int64_t> out(static_cast<std::size_t>(dim));
  const std::uint64_t chunks = chunk_count(dim);
#pragma omp parallel
  {
    std::vector<int> k(static_cast<std::size_t>(n));
#pragma omp for schedule(static)
    for (std::uint64_t c = 0; c < chunks; ++c) {
      const std::uint64_t begin = c * kRowChunk;
      walk_rows(basis, begin, std::min(dim, begin + kRowChunk), k, [&](std::uint64_t row, std::span<const int> q) {
        std::int64_t e = 0;
        for (int p = 0; p + 1 < n; ++p) e += static_cast<std::int64_t>(tj - q[p]) * q[p + 1];
        out[row] = e;
      });
    }
  }
  return out;
}

void matvec(const CsrMatrix& a, std::span<const double> x, std::span<double> y) {
  const auto rows = static_cast<std::int64_t>(a.rows);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) {
    double s = 0.0;
    for (auto p = a.row_ptr[i]; p < a.row_ptr[i + 1]; ++p) s += a.values[p] * x[a.cols[p]];
    y[i] = s;
  }
}

double dot(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  const std::size_t blocks = (n + kReduceBlock - 1) / kReduceBlock;
  if (blocks <= 1) return serial::dot(x, y);
  std::vector<double> partial(blocks);
#pragma omp parallel for schedule(static)
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t end = std::min(n, (b + 1) * kReduceBlock);
    double s = 0.0;
    for (std::size_t i = b * kReduceBlock; i < end; ++i) s += x[i] * y[i];
    partial[b] = s;
  }
  double s = 0.0;
  for (double p : partial) s += p;
  return s;
}

double norm(std::span<const double> x) { return std::sqrt(dot(x, x)); }

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  const auto n = static_cast<std::int64_t>(x.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale(double alpha, std::span<double> x) {
  const auto n = static_cast<std::int64_t>(x.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) x[i] *= alpha;
}

std::vector<double> log_amplitudes(const SectorBasis& basis, double log_q) {
  const std::uint64_t dim = basis.dim();
  const int n = basis.sites();
  const int L = basis.length();
  std::vector<double> table(static_cast<std::size_t>(basis.two_j() + 1));
  for (int q = 0; q <= basis.two_j(); ++q) table[q] = half_log_binom(basis.two_j(), q);

  std::vector<double> out(static_cast<std::size_t>(dim));
  const std::uint64_t chunks = chunk_count(dim);
#pragma omp parallel
  {
    std::vector<int> k(static_cast<std::size_t>(n));
#pragma omp for schedule(static)
    for (std::uint64_t c = 0; c < chunks; ++c) {
      const std::uint64_t begin = c * kRowChunk;
      walk_rows(basis, begin, std::min(dim, begin + kRowChunk), k, [&](std::uint64_t row, std::span<const int> q) {
        double s = 0.0;
        for (int p = 0; p < n; ++p) s += table[q[p]] + static_cast<double>(p - L) * q[p] * log_q;
        out[row] = s;
      });
    }
  }
  return out;
}

std::vector<double> site_magnetization(const SectorBasis& basis, std::span<const double> amplitudes) {
  const std::uint64_t dim = basis.dim();
  const int n = basis.sites();
  const double spin = basis.spin().value();
  const std::uint64_t blocks = (dim + kReduceBlock - 1) / kReduceBlock;
  // Accumulate weighted quanta per block, combine blocks in order.
  std::vector<double> partial(static_cast<std::size_t>(blocks * n), 0.0);
  std::vector<double> weight(static_cast<std::size_t>(blocks), 0.0);
#pragma omp parallel
  {
    std::vector<int> k(static_cast<std::size_t>(n));
#pragma omp for schedule(static)
    for (std::uint64_t b = 0; b < blocks; ++b) {
      const std::uint64_t begin = b * kReduceBlock;
      double* acc = partial.data() + b * n;
      walk_rows(basis, begin, std::min(dim, begin + kReduceBlock), k, [&](std::uint64_t row, std::span<const int> q) {
        const double w = amplitudes[row] * amplitudes[row];
        weight[b] += w;
        for (int p = 0; p < n; ++p) acc[p] += w * q[p];
      });
    }
  }
  double total = 0.0;
  std::vector<double> quanta(static_cast<std::size_t>(n), 0.0);
  for (std::uint64_t b = 0; b < blocks; ++b) {
    total += weight[b];
    for (int p = 0; p < n; ++p) quanta[p] += partial[b * n + p];
  }
  // <S3> = J * sum|v|^2 - <k>
  std::vector<double> prof(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) prof[p] = spin * total - quanta[p];
  return prof;
}

}  // namespace omp

}  // namespace kernels
}  // namespace kinkxxz
