#include "qagap/system_hamiltonian.hpp"

#include <cmath>

namespace qagap {

SystemHamiltonian::SystemHamiltonian(IsingModel ising, DriverSpec driver, double alpha)
    : ising_(std::move(ising)), driver_(std::move(driver)), alpha_(alpha) {
  const int n = ising_.num_qubits();
  if (n < 1 || n > 24) throw std::invalid_argument("qubit count out of supported range");
  diag_ = ising_.energies();
  for (double e : diag_) max_abs_diag_ = std::max(max_abs_diag_, std::abs(e));
  for (int i = 0; i < n; ++i) flip_masks_.push_back(State{1} << i);
  if (driver_.kind == DriverSpec::Kind::XX) {
    for (const auto& [u, v] : driver_.edges) {
      if (u < 0 || u >= v || v >= n) throw std::invalid_argument("invalid driver edge");
      pair_masks_.push_back((State{1} << u) | (State{1} << v));
    }
  }
}

void SystemHamiltonian::apply(double s, const double* x, double* y) const {
  if (s < 0.0 || s > 1.0) throw std::invalid_argument("s out of [0,1]");
  const std::size_t dim = diag_.size();
  const double ds = s * alpha_;
  const double off = -(1.0 - s);
  for (std::size_t z = 0; z < dim; ++z) y[z] = ds * diag_[z] * x[z];
  if (off != 0.0) {
    for (const State mask : flip_masks_)
      for (std::size_t z = 0; z < dim; ++z) y[z] += off * x[z ^ mask];
    const double pair = (1.0 - s) * driver_.lambda;
    for (const State mask : pair_masks_)
      for (std::size_t z = 0; z < dim; ++z) y[z] += pair * x[z ^ mask];
  }
}

Vector SystemHamiltonian::apply(double s, const Vector& v) const {
  if (static_cast<std::size_t>(v.size()) != dimension())
    throw std::invalid_argument("vector length != 2^n");
  Vector out(v.size());
  apply(s, v.data(), out.data());
  return out;
}

double SystemHamiltonian::norm_bound(double s) const {
  const double driver_norm =
      static_cast<double>(num_qubits()) + std::abs(driver_.lambda) * pair_masks_.size();
  return (1.0 - s) * driver_norm + s * std::abs(alpha_) * max_abs_diag_;
}

Matrix SystemHamiltonian::assemble_dense(double s) const {
  const std::size_t dim = dimension();
  Matrix H = Matrix::Zero(dim, dim);
  for (std::size_t z = 0; z < dim; ++z) H(z, z) = s * alpha_ * diag_[z];
  for (std::size_t z = 0; z < dim; ++z) {
    for (const State mask : flip_masks_) H(z ^ mask, z) += -(1.0 - s);
    for (const State mask : pair_masks_) H(z ^ mask, z) += (1.0 - s) * driver_.lambda;
  }
  return H;
}

Vector driver_ground_state(const DriverSpec& driver, int n) {
  if (!driver.stoquastic())
    throw std::invalid_argument(
        "driver ground state is not analytically the uniform superposition "
        "(non-stoquastic XX driver)");
  const std::size_t dim = std::size_t{1} << n;
  return Vector::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
}

}  // namespace qagap
