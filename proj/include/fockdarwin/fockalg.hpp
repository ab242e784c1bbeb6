#pragma once

#include <complex>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "fockdarwin/params.hpp"
#include "fockdarwin/report.hpp"
#include "fockdarwin/spectrum.hpp"

namespace fockdarwin {

// Extended precision: S+- products reach ~1e7 and the identities are checked to 1e-10 absolute.
using OperatorMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

// Dense matrices of the ladder, number and symmetry operators on the tensor
// basis |m> (x) |n>, 0 <= m, n <= n_max, with index m * (n_max + 1) + n.
struct FockOperatorSet {
  int n_max = 0;
  RationalRatio ratio{1, 1};
  double gamma = 0.0;

  OperatorMatrix a_minus, a_plus, b_minus, b_plus;
  OperatorMatrix M, N, L, H;
  OperatorMatrix S_minus;  // (a+)^q (b-)^p
  OperatorMatrix S_plus;   // (a-)^q (b+)^p

  int dim() const noexcept { return (n_max + 1) * (n_max + 1); }
  int index(const QuantumLabel& label) const noexcept { return label.m * (n_max + 1) + label.n; }
  QuantumLabel label(int index) const noexcept { return {index / (n_max + 1), index % (n_max + 1)}; }
};

/// Requires n_max >= p + q + 2.
FockOperatorSet build_ops(const RationalRatio& ratio, double gamma, int n_max);
FockOperatorSet build_ops(const RationalRatio& ratio, int n_max);

// Basis states with m, n <= n_max - band. Products of operators that move an
// occupation by at most band - 1 are free of truncation effects there.
struct InteriorMask {
  int band = 1;

  static InteriorMask for_ratio(const RationalRatio& ratio, int guard = 1);
  bool contains(const QuantumLabel& label, int n_max) const noexcept {
    return label.m <= n_max - band && label.n <= n_max - band;
  }
};

enum class Identity {
  // [a-, a+] = 1, [b-, b+] = 1 and the four mixed commutators [a, b] = 0
  HeisenbergA,
  HeisenbergB,
  MixedAMinusBMinus,
  MixedAMinusBPlus,
  MixedAPlusBMinus,
  MixedAPlusBPlus,
  // [a+-, L] = +-a+-, [b+-, L] = -+b+-
  AMinusL,
  APlusL,
  BMinusL,
  BPlusL,
  // polynomial algebra
  MN,
  MSPlus,
  MSMinus,
  NSPlus,
  NSMinus,
  SMinusSPlus,
  HSPlus,
  HSMinus,
  // isotropic oscillator, S = (N - M)/2: [S, S+-] = +-S+-, [S-, S+] = -2S, H central
  OscillatorSSPlus,
  OscillatorSSMinus,
  OscillatorSMinusSPlus,
  OscillatorHCentral,
  // Landau (1, 0): [S-, S+] = 1, [N, S+-] = +-S+-, H central
  LandauSMinusSPlus,
  LandauNSPlus,
  LandauNSMinus,
  LandauHCentral,
};

std::string_view identity_name(Identity id);
/// Throws std::invalid_argument for an unknown name.
Identity identity_from_name(std::string_view name);

/// Identities that apply to the ratio of an operator set: the general ones
/// always, the oscillator ones for (1,1), the Landau ones for (1,0).
std::vector<Identity> catalogue_for(const RationalRatio& ratio);

/// Max-norm of [X, Y] - rhs over masked rows and columns. Throws
/// std::invalid_argument when the identity does not belong to the ratio.
double commutator_residual(const FockOperatorSet& ops, Identity id, const InteriorMask& mask);
double commutator_residual(const FockOperatorSet& ops, std::string_view name, const InteriorMask& mask);

/// Diagonal matrices of the factorial polynomials
///   P1 = M(M-1)...(M-q+1) (N+1)...(N+p),  P2 = (M+1)...(M+q) N(N-1)...(N-p+1).
/// An empty product is the identity.
OperatorMatrix polynomial_p1(const FockOperatorSet& ops);
OperatorMatrix polynomial_p2(const FockOperatorSet& ops);

/// Masked max-norm of a matrix difference.
double masked_residual(const OperatorMatrix& diff, int n_max, const InteriorMask& mask);

/// H = 2a+a- + (1-gamma)L + 1 = 2b+b- - (1+gamma)L + 1, L = b+b- - a+a-,
/// H = (1+gamma)M + (1-gamma)N + 1; checked on the full truncated space.
Report verify_factorizations(const FockOperatorSet& ops, double tolerance = 1e-12);

/// Every catalogued identity for the set's ratio plus the two-way P1/P2 check,
/// on the given mask.
Report verify_algebra(const FockOperatorSet& ops, const InteriorMask& mask, double tolerance = 1e-10);

enum class Direction { Plus, Minus };

struct DegeneracyStep {
  std::optional<QuantumLabel> image;  // empty when the state is annihilated
  std::complex<double> amplitude;
};

/// S+ |m,n> ~ |m-q, n+p>,  S- |m,n> ~ |m+q, n-p>. Throws TruncationError when
/// the image lies outside the truncated space.
DegeneracyStep degeneracy_action(const FockOperatorSet& ops, const QuantumLabel& label, Direction dir);

}  // namespace fockdarwin
