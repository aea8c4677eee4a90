#include "qagap/ising_model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace qagap {

std::string state_to_string(State z, int n) {
  std::string s(n, '0');
  for (int i = 0; i < n; ++i)
    if (bit_of(z, i)) s[i] = '1';
  return s;
}

State state_from_string(const std::string& bits) {
  State z = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      z |= State{1} << i;
    else if (bits[i] != '0')
      throw std::invalid_argument("bad bit string: " + bits);
  }
  return z;
}

int hamming_distance(State a, State b) { return std::popcount(a ^ b); }

IsingModel::IsingModel(int n, std::vector<double> h, std::map<Edge, double> coupling, double offset)
    : n_(n), h_(std::move(h)), coupling_(std::move(coupling)), offset_(offset) {
  if (static_cast<int>(h_.size()) != n_) throw std::invalid_argument("h length != qubit count");
  for (const auto& [e, v] : coupling_) {
    (void)v;
    if (e.first < 0 || e.first >= e.second || e.second >= n_)
      throw std::invalid_argument("invalid coupling pair");
  }
}

double IsingModel::energy(State z) const {
  double e = offset_;
  for (int i = 0; i < n_; ++i) e += h_[i] * spin_of(z, i);
  for (const auto& [edge, J] : coupling_) e += J * spin_of(z, edge.first) * spin_of(z, edge.second);
  return e;
}

std::vector<double> IsingModel::energies() const {
  const std::size_t dim = dimension();
  std::vector<double> out(dim, offset_);
  // incremental: add each term's contribution over all states
  for (int i = 0; i < n_; ++i) {
    const State mask = State{1} << i;
    for (std::size_t z = 0; z < dim; ++z) out[z] += (z & mask) ? h_[i] : -h_[i];
  }
  for (const auto& [edge, J] : coupling_) {
    const State mi = State{1} << edge.first;
    const State mj = State{1} << edge.second;
    for (std::size_t z = 0; z < dim; ++z) {
      const bool aligned = static_cast<bool>(z & mi) == static_cast<bool>(z & mj);
      out[z] += aligned ? J : -J;
    }
  }
  return out;
}

double IsingModel::max_abs_coefficient() const {
  double m = 0.0;
  for (double v : h_) m = std::max(m, std::abs(v));
  for (const auto& [e, v] : coupling_) {
    (void)e;
    m = std::max(m, std::abs(v));
  }
  return m;
}

IsingModel IsingModel::normalized() const {
  const double m = max_abs_coefficient();
  if (m == 0.0) return *this;
  return scaled(1.0 / m);
}

IsingModel IsingModel::scaled(double factor) const {
  std::vector<double> h = h_;
  for (double& v : h) v *= factor;
  std::map<Edge, double> J = coupling_;
  for (auto& [e, v] : J) {
    (void)e;
    v *= factor;
  }
  return IsingModel(n_, std::move(h), std::move(J), offset_ * factor);
}

}  // namespace qagap
