#include "qagap/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qagap {

double Qubo::evaluate(State x) const {
  double y = constant;
  for (int i = 0; i < n; ++i)
    if (bit_of(x, i)) y += linear[i];
  for (const auto& [e, q] : quadratic)
    if (bit_of(x, e.first) && bit_of(x, e.second)) y += q;
  return y;
}

std::string term_to_string(const Term& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << '*';
    if (t[i].negated) os << '~';
    os << 'x' << (t[i].var + 1);
  }
  return os.str();
}

double Posiform::evaluate(State x) const {
  double y = a_empty;
  for (const auto& [term, coeff] : terms) {
    bool sat = true;
    for (const Literal& lit : term)
      if (static_cast<bool>(bit_of(x, lit.var)) == lit.negated) {
        sat = false;
        break;
      }
    if (sat) y += coeff;
  }
  return y;
}

Qubo ising_to_qubo(const IsingModel& m) {
  Qubo q;
  q.n = m.num_qubits();
  q.linear.assign(q.n, 0.0);
  double h_sum = 0.0, j_sum = 0.0;
  for (int i = 0; i < q.n; ++i) {
    q.linear[i] = -m.fields()[i] / 2.0;
    h_sum += m.fields()[i];
  }
  for (const auto& [e, J] : m.couplings()) {
    q.quadratic[e] = -J;
    q.linear[e.first] += J / 2.0;
    q.linear[e.second] += J / 2.0;
    j_sum += J;
  }
  q.constant = -(m.offset() - h_sum + j_sum) / 4.0;
  return q;
}

Posiform qubo_to_posiform(const Qubo& q) {
  constexpr double kDropTol = 1e-12;
  Posiform p;
  p.n = q.n;
  p.a_empty = q.constant;
  std::vector<double> linear = q.linear;

  // quadratics first (they feed corrections into the linear part)
  for (const auto& [e, c] : q.quadratic) {
    if (std::abs(c) <= kDropTol) continue;
    if (c > 0) {
      p.terms.push_back({{{e.first, false}, {e.second, false}}, c});
    } else {
      // -c x_i x_j = -c x_j + c ~x_i x_j, complementing the lower index
      p.terms.push_back({{{e.first, true}, {e.second, false}}, -c});
      linear[e.second] += c;
    }
  }
  for (int i = 0; i < q.n; ++i) {
    const double c = linear[i];
    if (std::abs(c) <= kDropTol) continue;
    if (c > 0) {
      p.terms.push_back({{{i, false}}, c});
    } else {
      p.terms.push_back({{{i, true}}, -c});
      p.a_empty += c;
    }
  }
  // merge duplicate literal sets (possible when the same pair enters twice)
  std::sort(p.terms.begin(), p.terms.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::pair<Term, double>> merged;
  for (auto& [term, coeff] : p.terms) {
    if (!merged.empty() && merged.back().first == term)
      merged.back().second += coeff;
    else
      merged.emplace_back(std::move(term), coeff);
  }
  std::erase_if(merged, [&](const auto& tc) { return std::abs(tc.second) <= kDropTol; });
  for (const auto& [term, coeff] : merged)
    if (coeff < 0)
      throw std::logic_error("posiform coefficient went negative: " + term_to_string(term));
  p.terms = std::move(merged);
  return p;
}

namespace {

bool in_conflict(const Term& a, const Term& b) {
  for (const Literal& u : a)
    for (const Literal& v : b)
      if (u.var == v.var && u.negated != v.negated) return true;
  return false;
}

}  // namespace

ConflictGraph conflict_graph(const Posiform& p) {
  const int nv = static_cast<int>(p.terms.size());
  std::vector<double> weights(nv);
  std::vector<Term> terms(nv);
  for (int i = 0; i < nv; ++i) {
    terms[i] = p.terms[i].first;
    weights[i] = p.terms[i].second;
  }
  std::vector<Edge> edges;
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j)
      if (in_conflict(terms[i], terms[j])) edges.push_back({i, j});
  ConflictGraph cg;
  cg.graph = WeightedGraph(nv, std::move(weights), std::move(edges));
  cg.terms = std::move(terms);
  cg.a_empty = p.a_empty;
  cg.source_vars = p.n;
  return cg;
}

State decode_mis_selection(const ConflictGraph& cg, const std::vector<int>& selected,
                           const IsingModel& original) {
  const int n = cg.source_vars;
  std::vector<int> forced(n, -1);
  for (int v : selected)
    for (const Literal& lit : cg.terms.at(v)) {
      const int want = lit.negated ? 0 : 1;
      if (forced[lit.var] >= 0 && forced[lit.var] != want)
        throw std::logic_error("conflicting literals in an independent term set");
      forced[lit.var] = want;
    }
  State z = 0;
  for (int i = 0; i < n; ++i)
    if (forced[i] == 1) z |= State{1} << i;
  // free variables: greedy single-flip descent on the original energy
  bool improved = true;
  while (improved) {
    improved = false;
    for (int i = 0; i < n; ++i) {
      if (forced[i] >= 0) continue;
      const State flipped = z ^ (State{1} << i);
      if (original.energy(flipped) < original.energy(z)) {
        z = flipped;
        improved = true;
      }
    }
  }
  return z;
}

std::pair<ConflictGraph, ReduceReport> reduce_and_verify(const IsingModel& m) {
  if (m.num_qubits() > 12)
    throw std::invalid_argument("reduce_and_verify: exhaustive leg limited to n <= 12");
  const Qubo q = ising_to_qubo(m);
  const Posiform phi = qubo_to_posiform(q);
  ConflictGraph cg = conflict_graph(phi);

  constexpr double kTol = 1e-9;
  const double scale = std::max(1.0, m.max_abs_coefficient());
  ReduceReport rep;
  rep.a_empty = phi.a_empty;

  const std::size_t dim = m.dimension();
  rep.max_phi = -std::numeric_limits<double>::infinity();
  for (std::size_t x = 0; x < dim; ++x) {
    const double yq = q.evaluate(static_cast<State>(x));
    const double yp = phi.evaluate(static_cast<State>(x));
    const double ez = m.energy(static_cast<State>(x));
    if (std::abs(yq - yp) > kTol * scale)
      throw std::runtime_error("posiform does not evaluate to the QUBO");
    if (std::abs(ez + 4.0 * yq) > kTol * scale)
      throw std::runtime_error("QUBO does not match the Ising energy under -4Y");
    rep.max_phi = std::max(rep.max_phi, yp);
  }

  const MisResult mis = brute_force_mis(cg.graph);
  rep.mis_weight = mis.best_weight;
  rep.identity_holds = std::abs(rep.max_phi - (rep.a_empty + rep.mis_weight)) <= kTol * scale;
  if (!rep.identity_holds)
    throw std::runtime_error("conflict-graph MIS identity failed: max phi != a_empty + mis");

  rep.decoded_state = decode_mis_selection(cg, mis.best_sets.at(0), m);
  rep.decoded_energy = m.energy(rep.decoded_state);
  rep.ground_energy = brute_force_ising(m).front().energy;
  rep.decoding_optimal = std::abs(rep.decoded_energy - rep.ground_energy) <= kTol * scale;
  if (!rep.decoding_optimal)
    throw std::runtime_error("decoded assignment does not attain the ground energy");
  return {std::move(cg), rep};
}

IsingModel reduced_instance_to_mis_ising(const ConflictGraph& cg, double extra) {
  WeightedGraph g = with_default_penalties(cg.graph, extra);
  return mis_to_ising(g);
}

}  // namespace qagap
