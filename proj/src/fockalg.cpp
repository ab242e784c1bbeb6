#include "fockdarwin/fockalg.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "fockdarwin/errors.hpp"

namespace fockdarwin {

namespace {

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b) {
  OperatorMatrix out = OperatorMatrix::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0.0L) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

OperatorMatrix power(const OperatorMatrix& x, int k) {
  OperatorMatrix out = OperatorMatrix::Identity(x.rows(), x.cols());
  for (int i = 0; i < k; ++i) out = out * x;
  return out;
}

OperatorMatrix comm(const OperatorMatrix& x, const OperatorMatrix& y) { return x * y - y * x; }

// rising (x+1)...(x+k) and falling x(x-1)...(x-k+1); empty products are 1
long double rising(int x, int k) {
  long double r = 1.0L;
  for (int i = 1; i <= k; ++i) r *= x + i;
  return r;
}
long double falling(int x, int k) {
  long double r = 1.0L;
  for (int i = 0; i < k; ++i) r *= x - i;
  return r;
}

constexpr std::array<std::pair<Identity, std::string_view>, 26> kNames{{
    {Identity::HeisenbergA, "heisenberg_a"},
    {Identity::HeisenbergB, "heisenberg_b"},
    {Identity::MixedAMinusBMinus, "mixed_am_bm"},
    {Identity::MixedAMinusBPlus, "mixed_am_bp"},
    {Identity::MixedAPlusBMinus, "mixed_ap_bm"},
    {Identity::MixedAPlusBPlus, "mixed_ap_bp"},
    {Identity::AMinusL, "am_L"},
    {Identity::APlusL, "ap_L"},
    {Identity::BMinusL, "bm_L"},
    {Identity::BPlusL, "bp_L"},
    {Identity::MN, "M_N"},
    {Identity::MSPlus, "M_Sp"},
    {Identity::MSMinus, "M_Sm"},
    {Identity::NSPlus, "N_Sp"},
    {Identity::NSMinus, "N_Sm"},
    {Identity::SMinusSPlus, "Sm_Sp"},
    {Identity::HSPlus, "H_Sp"},
    {Identity::HSMinus, "H_Sm"},
    {Identity::OscillatorSSPlus, "ho_S_Sp"},
    {Identity::OscillatorSSMinus, "ho_S_Sm"},
    {Identity::OscillatorSMinusSPlus, "ho_Sm_Sp"},
    {Identity::OscillatorHCentral, "ho_H_central"},
    {Identity::LandauSMinusSPlus, "landau_Sm_Sp"},
    {Identity::LandauNSPlus, "landau_N_Sp"},
    {Identity::LandauNSMinus, "landau_N_Sm"},
    {Identity::LandauHCentral, "landau_H_central"},
}};

bool is_oscillator_identity(Identity id) {
  return id == Identity::OscillatorSSPlus || id == Identity::OscillatorSSMinus ||
         id == Identity::OscillatorSMinusSPlus || id == Identity::OscillatorHCentral;
}

bool is_landau_identity(Identity id) {
  return id == Identity::LandauSMinusSPlus || id == Identity::LandauNSPlus || id == Identity::LandauNSMinus ||
         id == Identity::LandauHCentral;
}

}  // namespace

FockOperatorSet build_ops(const RationalRatio& ratio, double gamma, int n_max) {
  const int p = ratio.p();
  const int q = ratio.q();
  if (n_max < p + q + 2) {
    throw TruncationError("build_ops: n_max = " + std::to_string(n_max) + " < p + q + 2 = " +
                          std::to_string(p + q + 2));
  }
  const int d = n_max + 1;
  OperatorMatrix lower = OperatorMatrix::Zero(d, d);
  for (int m = 1; m < d; ++m) lower(m - 1, m) = std::sqrt(static_cast<long double>(m));
  const OperatorMatrix id1 = OperatorMatrix::Identity(d, d);
  const OperatorMatrix id = OperatorMatrix::Identity(d * d, d * d);

  FockOperatorSet ops;
  ops.n_max = n_max;
  ops.ratio = ratio;
  ops.gamma = gamma;
  ops.a_minus = kron(lower, id1);
  ops.a_plus = ops.a_minus.adjoint();
  ops.b_minus = kron(id1, lower);
  ops.b_plus = ops.b_minus.adjoint();
  OperatorMatrix number = OperatorMatrix::Zero(d, d);
  for (int m = 0; m < d; ++m) number(m, m) = m;
  ops.M = kron(number, id1);
  ops.N = kron(id1, number);
  ops.L = ops.N - ops.M;
  const long double lg = gamma;
  ops.H = (1.0L + lg) * ops.M + (1.0L - lg) * ops.N + id;
  const OperatorMatrix raise = lower.transpose();
  ops.S_minus = kron(power(raise, q), power(lower, p));
  ops.S_plus = kron(power(lower, q), power(raise, p));
  return ops;
}

FockOperatorSet build_ops(const RationalRatio& ratio, int n_max) { return build_ops(ratio, gamma_of(ratio), n_max); }

InteriorMask InteriorMask::for_ratio(const RationalRatio& ratio, int guard) {
  return {std::max(ratio.p(), ratio.q()) + guard};
}

std::string_view identity_name(Identity id) {
  for (const auto& [key, name] : kNames) {
    if (key == id) return name;
  }
  return "unknown";
}

Identity identity_from_name(std::string_view name) {
  for (const auto& [key, n] : kNames) {
    if (n == name) return key;
  }
  throw std::invalid_argument("unknown identity name: " + std::string(name));
}

std::vector<Identity> catalogue_for(const RationalRatio& ratio) {
  std::vector<Identity> out;
  for (const auto& [id, name] : kNames) {
    if (is_oscillator_identity(id) && !ratio.is_oscillator()) continue;
    if (is_landau_identity(id) && !(ratio.p() == 1 && ratio.q() == 0)) continue;
    out.push_back(id);
  }
  return out;
}

OperatorMatrix polynomial_p1(const FockOperatorSet& ops) {
  OperatorMatrix out = OperatorMatrix::Zero(ops.dim(), ops.dim());
  for (int i = 0; i < ops.dim(); ++i) {
    const QuantumLabel s = ops.label(i);
    out(i, i) = falling(s.m, ops.ratio.q()) * rising(s.n, ops.ratio.p());
  }
  return out;
}

OperatorMatrix polynomial_p2(const FockOperatorSet& ops) {
  OperatorMatrix out = OperatorMatrix::Zero(ops.dim(), ops.dim());
  for (int i = 0; i < ops.dim(); ++i) {
    const QuantumLabel s = ops.label(i);
    out(i, i) = rising(s.m, ops.ratio.q()) * falling(s.n, ops.ratio.p());
  }
  return out;
}

double masked_residual(const OperatorMatrix& diff, int n_max, const InteriorMask& mask) {
  const int d = n_max + 1;
  double worst = 0.0;
  for (int i = 0; i < diff.rows(); ++i) {
    if (!mask.contains({i / d, i % d}, n_max)) continue;
    for (int j = 0; j < diff.cols(); ++j) {
      if (!mask.contains({j / d, j % d}, n_max)) continue;
      worst = std::max(worst, static_cast<double>(std::abs(diff(i, j))));
    }
  }
  return worst;
}

double commutator_residual(const FockOperatorSet& ops, Identity id, const InteriorMask& mask) {
  if (is_oscillator_identity(id) && !ops.ratio.is_oscillator()) {
    throw std::invalid_argument("identity " + std::string(identity_name(id)) + " needs p = q = 1");
  }
  if (is_landau_identity(id) && !(ops.ratio.p() == 1 && ops.ratio.q() == 0)) {
    throw std::invalid_argument("identity " + std::string(identity_name(id)) + " needs (p, q) = (1, 0)");
  }
  const long double p = ops.ratio.p();
  const long double q = ops.ratio.q();
  const OperatorMatrix one = OperatorMatrix::Identity(ops.dim(), ops.dim());
  auto r = [&](const OperatorMatrix& diff) { return masked_residual(diff, ops.n_max, mask); };

  switch (id) {
    case Identity::HeisenbergA: return r(comm(ops.a_minus, ops.a_plus) - one);
    case Identity::HeisenbergB: return r(comm(ops.b_minus, ops.b_plus) - one);
    case Identity::MixedAMinusBMinus: return r(comm(ops.a_minus, ops.b_minus));
    case Identity::MixedAMinusBPlus: return r(comm(ops.a_minus, ops.b_plus));
    case Identity::MixedAPlusBMinus: return r(comm(ops.a_plus, ops.b_minus));
    case Identity::MixedAPlusBPlus: return r(comm(ops.a_plus, ops.b_plus));
    case Identity::AMinusL: return r(comm(ops.a_minus, ops.L) + ops.a_minus);
    case Identity::APlusL: return r(comm(ops.a_plus, ops.L) - ops.a_plus);
    case Identity::BMinusL: return r(comm(ops.b_minus, ops.L) - ops.b_minus);
    case Identity::BPlusL: return r(comm(ops.b_plus, ops.L) + ops.b_plus);
    case Identity::MN: return r(comm(ops.M, ops.N));
    case Identity::MSPlus: return r(comm(ops.M, ops.S_plus) + q * ops.S_plus);
    case Identity::MSMinus: return r(comm(ops.M, ops.S_minus) - q * ops.S_minus);
    case Identity::NSPlus: return r(comm(ops.N, ops.S_plus) - p * ops.S_plus);
    case Identity::NSMinus: return r(comm(ops.N, ops.S_minus) + p * ops.S_minus);
    case Identity::SMinusSPlus:
      return r(comm(ops.S_minus, ops.S_plus) - (polynomial_p1(ops) - polynomial_p2(ops)));
    case Identity::HSPlus: return r(comm(ops.H, ops.S_plus));
    case Identity::HSMinus: return r(comm(ops.H, ops.S_minus));
    case Identity::OscillatorSSPlus: {
      const OperatorMatrix s = 0.5L * ops.L;
      return r(comm(s, ops.S_plus) - ops.S_plus);
    }
    case Identity::OscillatorSSMinus: {
      const OperatorMatrix s = 0.5L * ops.L;
      return r(comm(s, ops.S_minus) + ops.S_minus);
    }
    case Identity::OscillatorSMinusSPlus: return r(comm(ops.S_minus, ops.S_plus) + ops.L);
    case Identity::OscillatorHCentral:
      return std::max({r(comm(ops.H, 0.5L * ops.L)), r(comm(ops.H, ops.S_plus)), r(comm(ops.H, ops.S_minus))});
    case Identity::LandauSMinusSPlus: return r(comm(ops.S_minus, ops.S_plus) - one);
    case Identity::LandauNSPlus: return r(comm(ops.N, ops.S_plus) - ops.S_plus);
    case Identity::LandauNSMinus: return r(comm(ops.N, ops.S_minus) + ops.S_minus);
    case Identity::LandauHCentral:
      return std::max({r(comm(ops.H, ops.N)), r(comm(ops.H, ops.S_plus)), r(comm(ops.H, ops.S_minus))});
  }
  throw std::invalid_argument("unknown identity");
}

double commutator_residual(const FockOperatorSet& ops, std::string_view name, const InteriorMask& mask) {
  return commutator_residual(ops, identity_from_name(name), mask);
}

Report verify_factorizations(const FockOperatorSet& ops, double tolerance) {
  const OperatorMatrix one = OperatorMatrix::Identity(ops.dim(), ops.dim());
  const long double g = ops.gamma;
  const InteriorMask full{0};
  auto r = [&](const OperatorMatrix& diff) { return masked_residual(diff, ops.n_max, full); };
  const std::string where = "n_max=" + std::to_string(ops.n_max) + " full space";

  Report report;
  report.suite = "factorizations";
  report.add("H_eq_2apam_plus_(1-g)L_plus_1", r(ops.H - (2.0L * ops.a_plus * ops.a_minus + (1.0L - g) * ops.L + one)),
             tolerance, where);
  report.add("H_eq_2bpbm_minus_(1+g)L_plus_1",
             r(ops.H - (2.0L * ops.b_plus * ops.b_minus - (1.0L + g) * ops.L + one)), tolerance, where);
  report.add("L_eq_bpbm_minus_apam", r(ops.L - (ops.b_plus * ops.b_minus - ops.a_plus * ops.a_minus)), tolerance,
             where);
  report.add("H_eq_(1+g)M_plus_(1-g)N_plus_1", r(ops.H - ((1.0L + g) * ops.M + (1.0L - g) * ops.N + one)), tolerance,
             where);

  double spectral = 0.0;
  for (int i = 0; i < ops.dim(); ++i) spectral = std::max(spectral, static_cast<double>(std::abs(ops.H(i, i) - energy(ops.label(i), ops.gamma))));
  report.add("H_diagonal_eq_energy", spectral, tolerance, where);
  return report;
}

Report verify_algebra(const FockOperatorSet& ops, const InteriorMask& mask, double tolerance) {
  Report report;
  report.suite = "algebra";
  const std::string where = "ratio=" + std::to_string(ops.ratio.p()) + "/" + std::to_string(ops.ratio.q()) +
                            " n_max=" + std::to_string(ops.n_max) + " band=" + std::to_string(mask.band);
  for (Identity id : catalogue_for(ops.ratio)) {
    report.add(std::string(identity_name(id)), commutator_residual(ops, id, mask), tolerance, where);
  }
  report.add("P1_eq_SmSp", masked_residual(ops.S_minus * ops.S_plus - polynomial_p1(ops), ops.n_max, mask),
             tolerance, where);
  report.add("P2_eq_SpSm", masked_residual(ops.S_plus * ops.S_minus - polynomial_p2(ops), ops.n_max, mask),
             tolerance, where);
  return report;
}

DegeneracyStep degeneracy_action(const FockOperatorSet& ops, const QuantumLabel& label, Direction dir) {
  const int p = ops.ratio.p();
  const int q = ops.ratio.q();
  if (label.m < 0 || label.n < 0 || label.m > ops.n_max || label.n > ops.n_max) {
    throw TruncationError("degeneracy_action: source state outside the truncated space");
  }
  const bool plus = dir == Direction::Plus;
  if (plus ? label.m < q : label.n < p) return {std::nullopt, 0.0};

  const QuantumLabel image = plus ? QuantumLabel{label.m - q, label.n + p} : QuantumLabel{label.m + q, label.n - p};
  if (image.m > ops.n_max || image.n > ops.n_max) {
    throw TruncationError("degeneracy_action: image state outside the truncated space");
  }
  const OperatorMatrix& s = plus ? ops.S_plus : ops.S_minus;
  return {image, static_cast<double>(s(ops.index(image), ops.index(label)))};
}

}  // namespace fockdarwin
