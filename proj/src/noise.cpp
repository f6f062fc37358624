#include "naed/noise.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <vector>

#include "naed/gates.hpp"
#include "naed/rng.hpp"

namespace naed {

Matrix2 phase_error(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi)) {
    throw ValidationError("phase_error angles must be finite");
  }
  Matrix2 m;
  m << std::polar(1.0, phi), 0, 0, std::polar(1.0, phi + theta);
  return m;
}

namespace {

std::string json_number(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

PhysicalGate error_gate(const InjectionSpec& spec) {
  switch (spec.error) {
    case ErrorKind::X:
      return PhysicalGate::x(spec.qubit);
    case ErrorKind::Y:
      return PhysicalGate::u3(spec.qubit, M_PI, M_PI_2, M_PI_2);
    case ErrorKind::Z:
      return PhysicalGate::u3(spec.qubit, 0.0, 0.0, M_PI);
    case ErrorKind::Phase:
      return PhysicalGate::u3(spec.qubit, 0.0, 0.0, spec.theta);
    case ErrorKind::Custom: {
      const U3Angles a = u3_angles_of(spec.custom);
      return PhysicalGate::u3(spec.qubit, a.theta, a.phi, a.lambda);
    }
  }
  throw ValidationError("unknown error kind");
}

}  // namespace

std::string InjectionSpec::to_json() const {
  const char* name = nullptr;
  switch (error) {
    case ErrorKind::X: name = "X"; break;
    case ErrorKind::Y: name = "Y"; break;
    case ErrorKind::Z: name = "Z"; break;
    case ErrorKind::Phase: name = "PHASE"; break;
    case ErrorKind::Custom:
      throw ValidationError("custom error matrices are not serializable");
  }
  return std::string("{\"site\":") + std::to_string(site) +
         ",\"qubit\":" + std::to_string(qubit) + ",\"error\":\"" + name +
         "\",\"theta\":" + json_number(theta) +
         ",\"phi\":" + json_number(phi) + "}";
}

PhysicalCircuit inject(const PhysicalCircuit& circuit,
                       const InjectionSpec& spec) {
  if (spec.site < -1 || spec.site >= static_cast<int>(circuit.gates.size())) {
    throw ValidationError("injection site out of range");
  }
  if (spec.qubit < 0 || spec.qubit >= circuit.n_qubits) {
    throw ValidationError("injection qubit out of range");
  }
  PhysicalCircuit out = circuit;
  out.gates.insert(out.gates.begin() + (spec.site + 1), error_gate(spec));
  for (auto& b : out.boundaries) {
    if (b > spec.site) ++b;
  }
  return out;
}

std::string StochasticModel::to_json() const {
  std::string out = "{\"p_gate\":" + json_number(p_gate) +
                    ",\"gamma\":" + json_number(gamma) +
                    ",\"seed\":" + std::to_string(seed);
  if (paulis != "XYZ") out += ",\"paulis\":\"" + paulis + "\"";
  return out + "}";
}

namespace {

// Per-shot trajectory state. Stays a sorted sparse term list until the
// support crosses kDenseLimit, then flattens to a dense vector. The squared
// norm is tracked so no-jump damping branches can stay unnormalized.
class TrajState {
 public:
  TrajState(int n_qubits)
      : n_qubits_(n_qubits), dim_(std::uint64_t{1} << n_qubits) {
    terms_.emplace_back(0, Complex(1.0, 0.0));
  }

  void apply(const PhysicalGate& g) {
    switch (g.kind) {
      case GateKind::U3:
        apply_u3(u3_matrix(g.theta, g.phi, g.lambda), g.q0);
        break;
      case GateKind::CX:
        apply_cx(g.q0, g.q1);
        break;
      case GateKind::X:
        apply_perm([m = mask(g.q0)](std::uint64_t b) { return b ^ m; },
                   [](std::uint64_t, Complex a) { return a; });
        break;
    }
  }

  void apply_pauli(char p, int q) {
    const std::uint64_t m = mask(q);
    switch (p) {
      case 'X':
        apply_perm([m](std::uint64_t b) { return b ^ m; },
                   [](std::uint64_t, Complex a) { return a; });
        break;
      case 'Y':
        apply_perm([m](std::uint64_t b) { return b ^ m; },
                   [m](std::uint64_t b, Complex a) {
                     // phase applies to the source basis state
                     return (b & m) ? Complex(0, -1) * a : Complex(0, 1) * a;
                   });
        break;
      case 'Z':
        apply_phase(m);
        break;
      default:
        throw ValidationError("unknown Pauli tag");
    }
  }

  /// One damping step on qubit q: with probability gamma*P1/norm a quantum
  /// jump |1> -> |0> (renormalized), otherwise the no-jump Kraus operator
  /// diag(1, sqrt(1-gamma)) with the norm left to the tracker.
  void damp(int q, double gamma, SplitMix64& rng) {
    const double u = rng.uniform();
    const std::uint64_t m = mask(q);
    const double p1_abs = prob1_abs(m);
    if (p1_abs <= 0.0) return;  // qubit is |0>: both branches act trivially
    if (u * norm2_ < gamma * p1_abs) {
      jump_to_zero(m);
    } else {
      scale_set_bit(m, std::sqrt(1.0 - gamma));
      norm2_ -= gamma * p1_abs;
    }
  }

  std::uint64_t measure(SplitMix64& rng) const {
    const double target = rng.uniform() * norm2_;
    double cumulative = 0.0;
    if (dense_) {
      std::uint64_t last_nonzero = 0;
      for (std::uint64_t b = 0; b < dim_; ++b) {
        const double p = std::norm(amps_[b]);
        if (p > 0.0) last_nonzero = b;
        cumulative += p;
        if (target < cumulative) return b;
      }
      return last_nonzero;
    }
    for (const auto& [b, a] : terms_) {
      cumulative += std::norm(a);
      if (target < cumulative) return b;
    }
    return terms_.back().first;
  }

 private:
  std::uint64_t mask(int q) const { return qubit_mask(n_qubits_, q); }

  double prob1_abs(std::uint64_t m) const {
    double p = 0.0;
    if (dense_) {
      for (std::uint64_t b = 0; b < dim_; ++b) {
        if (b & m) p += std::norm(amps_[b]);
      }
    } else {
      for (const auto& [b, a] : terms_) {
        if (b & m) p += std::norm(a);
      }
    }
    return p;
  }

  void scale_set_bit(std::uint64_t m, double factor) {
    if (dense_) {
      for (std::uint64_t b = 0; b < dim_; ++b) {
        if (b & m) amps_[b] *= factor;
      }
    } else {
      for (auto& [b, a] : terms_) {
        if (b & m) a *= factor;
      }
    }
  }

  void jump_to_zero(std::uint64_t m) {
    double kept = 0.0;
    if (dense_) {
      // Every clear-bit slot is overwritten by its set-bit partner, which
      // annihilates the old |0> components as the jump operator requires.
      for (std::uint64_t b = 0; b < dim_; ++b) {
        if (b & m) {
          kept += std::norm(amps_[b]);
          amps_[b & ~m] = amps_[b];
          amps_[b] = 0.0;
        }
      }
    } else {
      std::vector<std::pair<std::uint64_t, Complex>> next;
      next.reserve(terms_.size());
      for (const auto& [b, a] : terms_) {
        if (b & m) {
          kept += std::norm(a);
          next.emplace_back(b & ~m, a);
        }
      }
      terms_ = std::move(next);
    }
    const double scale = 1.0 / std::sqrt(kept);
    if (dense_) {
      for (std::uint64_t b = 0; b < dim_; ++b) amps_[b] *= scale;
    } else {
      for (auto& [b, a] : terms_) a *= scale;
    }
    norm2_ = 1.0;
  }

  template <typename IndexMap, typename AmpMap>
  void apply_perm(IndexMap index_of, AmpMap amp_of) {
    if (dense_) {
      CVector next = CVector::Zero(dim_);
      for (std::uint64_t b = 0; b < dim_; ++b) {
        next[index_of(b)] = amp_of(b, amps_[b]);
      }
      amps_ = std::move(next);
      return;
    }
    for (auto& [b, a] : terms_) {
      a = amp_of(b, a);
      b = index_of(b);
    }
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& lhs, const auto& rhs) {
                return lhs.first < rhs.first;
              });
  }

  void apply_phase(std::uint64_t m) {
    if (dense_) {
      for (std::uint64_t b = 0; b < dim_; ++b) {
        if (b & m) amps_[b] = -amps_[b];
      }
      return;
    }
    for (auto& [b, a] : terms_) {
      if (b & m) a = -a;
    }
  }

  void apply_cx(int control, int target) {
    const std::uint64_t cm = mask(control);
    const std::uint64_t tm = mask(target);
    apply_perm([cm, tm](std::uint64_t b) { return (b & cm) ? b ^ tm : b; },
               [](std::uint64_t, Complex a) { return a; });
  }

  void apply_u3(const Matrix2& u, int q) {
    const std::uint64_t m = mask(q);
    if (dense_) {
      StateVector view;
      view.n_qubits = n_qubits_;
      view.amps = std::move(amps_);
      detail::apply_matrix_1q(view, u, q);
      amps_ = std::move(view.amps);
      return;
    }
    std::vector<std::pair<std::uint64_t, Complex>> next;
    next.reserve(terms_.size() * 2);
    for (const auto& [b, a] : terms_) {
      const bool one = (b & m) != 0;
      const Complex to_zero = one ? u(0, 1) * a : u(0, 0) * a;
      const Complex to_one = one ? u(1, 1) * a : u(1, 0) * a;
      if (to_zero != Complex(0.0, 0.0)) next.emplace_back(b & ~m, to_zero);
      if (to_one != Complex(0.0, 0.0)) next.emplace_back(b | m, to_one);
    }
    std::sort(next.begin(), next.end(), [](const auto& lhs, const auto& rhs) {
      return lhs.first < rhs.first;
    });
    terms_.clear();
    for (const auto& [b, a] : next) {
      if (!terms_.empty() && terms_.back().first == b) {
        terms_.back().second += a;
        if (terms_.back().second == Complex(0.0, 0.0)) terms_.pop_back();
      } else {
        terms_.emplace_back(b, a);
      }
    }
    // Once half the space is populated the flat array is cheaper.
    if (terms_.size() * 2 >= dim_) densify();
  }

  void densify() {
    if (dense_) return;
    amps_ = CVector::Zero(dim_);
    for (const auto& [b, a] : terms_) amps_[b] = a;
    terms_.clear();
    dense_ = true;
  }

  int n_qubits_;
  std::uint64_t dim_;
  bool dense_ = false;
  std::vector<std::pair<std::uint64_t, Complex>> terms_;
  CVector amps_;
  double norm2_ = 1.0;
};

void validate_model(const StochasticModel& model) {
  if (!(model.p_gate >= 0.0 && model.p_gate <= 1.0)) {
    throw ValidationError("p_gate must be in [0, 1]");
  }
  if (!(model.gamma >= 0.0 && model.gamma <= 1.0)) {
    throw ValidationError("gamma must be in [0, 1]");
  }
  if (model.paulis.empty() ||
      model.paulis.find_first_not_of("XYZ") != std::string::npos) {
    throw ValidationError("paulis must be a non-empty subset of \"XYZ\"");
  }
}

}  // namespace

Counts simulate_noisy(const PhysicalCircuit& circuit,
                      const StochasticModel& model, std::uint64_t shots,
                      std::uint64_t seed) {
  validate_model(model);
  circuit.validate();
  if (shots == 0) throw ValidationError("shots must be positive");
  if (circuit.n_qubits < 1 || circuit.n_qubits > kMaxQubits) {
    throw CapacityError("register outside [1, 25] qubits");
  }
  if (model.p_gate == 0.0 && model.gamma == 0.0) {
    return sample(simulate(circuit), shots, seed);
  }

  Counts counts;
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    SplitMix64 rng(derive_seed(model.seed, seed, shot));
    TrajState state(circuit.n_qubits);
    for (const auto& g : circuit.gates) {
      state.apply(g);
      if (model.p_gate > 0.0) {
        const int touched[2] = {g.q0, g.kind == GateKind::CX ? g.q1 : -1};
        for (int tq : touched) {
          if (tq < 0) continue;
          if (rng.uniform() < model.p_gate) {
            state.apply_pauli(
                model.paulis[rng.below(model.paulis.size())], tq);
          }
        }
      }
      if (model.gamma > 0.0) {
        for (int q = 0; q < circuit.n_qubits; ++q) {
          state.damp(q, model.gamma, rng);
        }
      }
    }
    counts[bits_of_index(state.measure(rng), circuit.n_qubits)] += 1;
  }
  return counts;
}

}  // namespace naed
