#include "kinkxxz/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

#include "kinkxxz/kernels.hpp"

namespace kinkxxz {

std::int64_t ising_bond_energy(HalfInt spin, HalfInt m, HalfInt m_right) {
  for (HalfInt v : {m, m_right})
    if (v < -spin || v > spin || (spin - v).twice() % 2 != 0)
      throw std::invalid_argument("m=" + v.to_string() + " is not a level of spin " + spin.to_string());
  return ((spin + m).twice() / 2) * ((spin - m_right).twice() / 2);
}

std::int64_t ising_config_energy(const IsingConfig& c) {
  std::int64_t e = 0;
  auto v = c.values();
  for (std::size_t p = 0; p + 1 < v.size(); ++p) e += ising_bond_energy(c.spin(), v[p], v[p + 1]);
  return e;
}

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::kink: return "kink";
    case Variant::antikink: return "antikink";
    case Variant::ising_kink: return "ising_kink";
    case Variant::ising_free: return "ising_free";
    case Variant::h1: return "h1";
    case Variant::h2: return "h2";
  }
  return "?";
}

Variant parse_variant(std::string_view name) {
  for (Variant v : {Variant::kink, Variant::antikink, Variant::ising_kink, Variant::ising_free, Variant::h1, Variant::h2})
    if (name == to_string(v)) return v;
  if (name == "ising-kink") return Variant::ising_kink;
  if (name == "ising-free") return Variant::ising_free;
  throw std::invalid_argument("unknown variant '" + std::string(name) + "'");
}

void SectorOperator::apply(std::span<const double> x, std::span<double> y) const {
  kernels::omp::matvec(matrix, x, y);
}

namespace {

kernels::RowWeights weights_for(Variant variant, double delta_inv) {
  const double s = std::sqrt(1.0 - delta_inv * delta_inv);
  switch (variant) {
    case Variant::kink: return {1.0, 1.0 - s, delta_inv};
    case Variant::antikink: return {1.0, 1.0 + s, delta_inv};
    case Variant::ising_kink: return {1.0, 0.0, 0.0};
    case Variant::ising_free: return {1.0, 1.0, 0.0};
    case Variant::h1: return {0.0, 0.0, 1.0};
    case Variant::h2: return {0.0, 1.0, 0.0};
  }
  throw std::logic_error("unhandled variant");
}

bool uses_delta(Variant v) { return v == Variant::kink || v == Variant::antikink; }

}  // namespace

SectorOperator build_sector_operator(std::shared_ptr<const SectorBasis> basis, Variant variant, double delta_inv) {
  if (!(delta_inv >= 0.0 && delta_inv <= 1.0))
    throw std::invalid_argument("delta_inv must lie in [0, 1], got " + std::to_string(delta_inv));
  if (!basis || basis->dim() == 0) throw std::invalid_argument("empty sector");
  SectorOperator op;
  op.variant = variant;
  op.delta_inv = uses_delta(variant) ? delta_inv : 0.0;
  op.matrix = kernels::omp::assemble(*basis, weights_for(variant, op.delta_inv));
  op.basis = std::move(basis);
  return op;
}

SectorOperator build_sector_operator(HalfInt spin, int length, HalfInt magnetization, Variant variant,
                                     double delta_inv) {
  return build_sector_operator(std::make_shared<const SectorBasis>(spin, length, magnetization), variant, delta_inv);
}

double direct_diagonal(const IsingConfig& c, Variant variant, double delta_inv) {
  const double j = c.spin().value();
  const auto v = c.values();
  double free = 0.0;
  for (std::size_t p = 0; p + 1 < v.size(); ++p) free += j * j - v[p].value() * v[p + 1].value();
  const double field = j * (v.front().value() - v.back().value());
  const double s = std::sqrt(1.0 - delta_inv * delta_inv);
  switch (variant) {
    case Variant::kink: return free + s * field;
    case Variant::antikink: return free - s * field;
    case Variant::ising_kink: return free + field;
    case Variant::ising_free: return free;
    case Variant::h1: return 0.0;
    case Variant::h2: return -field;
  }
  throw std::logic_error("unhandled variant");
}

}  // namespace kinkxxz
