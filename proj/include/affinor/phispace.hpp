#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "affinor/liealg.hpp"

namespace affinor {

/// Two canonical structures are the same operator when they differ by at most this much on
/// every basis vector of m.
inline constexpr double kOperatorTol = 1e-9;

/// Inner automorphism I(s) of SU(3) by a diagonal element s of finite order.
struct InnerAutomorphism {
  std::array<cplx, 3> s{};
  int order = 1;
};

/// Validates that diag(s) lies in SU(3) and that `order` is its exact order.
/// Throws NotFiniteOrder if s^order != 1 or a smaller positive power already is 1,
/// InvalidInput if s is not special unitary.
InnerAutomorphism make_inner_automorphism(const std::array<cplx, 3>& s, int order);

enum class AffinorTag { J, P, f, h, other };
std::string to_string(AffinorTag tag);

/// A linear endomorphism F of m, in the real basis of the D-blocks that span m.
struct AffinorStructure {
  Eigen::MatrixXd op;
  AffinorTag tag = AffinorTag::other;
  std::array<bool, 3> blocks{};  // which of m1, m2, m3 belong to m

  [[nodiscard]] int rank() const;
  /// Action on each block of m as a complex multiplier; nullopt when F is not complex-linear
  /// block by block. Blocks outside m report 0.
  [[nodiscard]] std::optional<std::array<cplx, 3>> block_multipliers() const;
  /// (zeta1, zeta2, zeta3) when F acts on every block as zeta_j * i; blocks outside m report 0.
  [[nodiscard]] std::optional<std::array<int, 3>> characteristic() const;
  /// Representative of {F, -F} whose first nonzero block multiplier has positive imaginary
  /// part (positive real part for real multipliers).
  [[nodiscard]] AffinorStructure sign_canonical() const;
};

/// Assigns J, P, f, h or other from the defining polynomial identities (tolerance kOperatorTol).
/// The zero operator is tagged h.
AffinorTag classify_affinor(const Eigen::MatrixXd& op);

/// Max over basis vectors of the norm of (a - b) applied to them.
double operator_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// The restriction theta of Ad(s) to the canonical complement m.
class ThetaOperator {
 public:
  ThetaOperator() = default;
  ThetaOperator(const InnerAutomorphism& aut, std::array<cplx, 3> multipliers, std::array<bool, 3> blocks);

  [[nodiscard]] int order() const { return aut_.order; }
  [[nodiscard]] const InnerAutomorphism& automorphism() const { return aut_; }
  /// theta acts on the coordinates (a, b, c) by multiplication with these.
  [[nodiscard]] const std::array<cplx, 3>& multipliers() const { return multipliers_; }
  [[nodiscard]] const std::array<bool, 3>& blocks() const { return blocks_; }
  [[nodiscard]] int dim() const { return static_cast<int>(matrix_.rows()); }
  [[nodiscard]] const Eigen::MatrixXd& matrix() const { return matrix_; }
  [[nodiscard]] Eigen::MatrixXd identity() const;
  [[nodiscard]] Eigen::MatrixXd power(int m) const;

  /// Distinct complex eigenvalues of theta on m.
  [[nodiscard]] const std::vector<cplx>& spectrum() const { return spectrum_; }
  /// Number of irreducible quadratic factors of the minimal polynomial over R.
  [[nodiscard]] int quadratic_factors() const { return quadratic_; }
  /// Number of all irreducible factors of the minimal polynomial over R.
  [[nodiscard]] int irreducible_factors() const { return irreducible_; }
  [[nodiscard]] bool has_minus_one() const;

  /// sum_m coeffs[m] theta^m.
  [[nodiscard]] Eigen::MatrixXd polynomial(std::span<const double> coeffs) const;
  [[nodiscard]] AffinorStructure structure(Eigen::MatrixXd op) const;

  /// Embeds a tangent vector's m-part into the real coordinates used by matrix().
  [[nodiscard]] Eigen::VectorXd coordinates(const TangentVector& x) const;
  [[nodiscard]] TangentVector vector(const Eigen::VectorXd& v) const;

 private:
  InnerAutomorphism aut_{};
  std::array<cplx, 3> multipliers_{cplx(1.0), cplx(1.0), cplx(1.0)};
  std::array<bool, 3> blocks_{};
  Eigen::MatrixXd matrix_;
  std::vector<cplx> spectrum_;
  int quadratic_ = 0;
  int irreducible_ = 0;
};

/// Ad(s) on su(3) as a real 8x8 matrix in the basis E(i,-i,0), E(0,i,-i) followed by tangent_basis().
Eigen::Matrix<double, 8, 8> adjoint_action(const std::array<cplx, 3>& s);

/// Builds theta and checks the regular-space condition g = h + A g for A = Ad(s) - id.
/// Throws RegularityViolation if the check fails.
ThetaOperator build_theta(const InnerAutomorphism& aut);

/// u = n for k = 2n + 1 and u = n - 1 for k = 2n.
int coefficient_count(int k);

/// f = (2/k) sum_m (sum_j zeta_j sin(2 pi m j / k)) (theta^m - theta^(k-m)), m, j = 1..u.
/// Throws ArityMismatch, AllZeroCoefficients.
AffinorStructure canonical_f(const ThetaOperator& theta, std::span<const int> zeta, int k);

/// h = sum_m a_m theta^m. For even k the last entry of xi is the coefficient of the
/// eigenvalue -1. Throws ArityMismatch.
AffinorStructure canonical_h(const ThetaOperator& theta, std::span<const int> xi, int k);

/// Predicted structure counts for a given (s, s~). All counts but h are 0 when m = {0}.
struct StructureCounts {
  int P = 0;
  int J = 0;
  int f = 0;
  int h = 0;
  friend bool operator==(const StructureCounts&, const StructureCounts&) = default;
};
StructureCounts predicted_counts(int quadratic, int irreducible);

struct CanonicalCatalog {
  std::vector<AffinorStructure> f_structures;  // distinct, nonzero
  std::vector<AffinorStructure> h_structures;  // distinct, zero included
  StructureCounts observed;
  StructureCounts predicted;
  int f_up_to_sign = 0;
  /// One entry per non-trivial coefficient vector zeta: rank of the resulting operator
  /// (0 when the coefficients collapse).
  std::vector<int> f_coefficient_ranks;

  [[nodiscard]] bool counts_match() const { return observed == predicted; }
};

/// Runs every coefficient vector through canonical_f and canonical_h and deduplicates.
CanonicalCatalog enumerate_canonical(const ThetaOperator& theta, int k);

struct IdentityCheck {
  std::string name;
  double residual = 0.0;
  bool holds = false;
};

/// Order 3: J = (theta - theta^2)/sqrt(3), P = 1.
struct Order3Structures {
  AffinorStructure J;
  AffinorStructure P;
  std::vector<IdentityCheck> identities;
};
Order3Structures order3_structures(const ThetaOperator& theta);

/// Order 4: P = theta^2, f = (theta - theta^3)/2, h1 = (1 - theta^2)/2, h2 = (1 + theta^2)/2.
struct Order4Structures {
  AffinorStructure P, f, h1, h2;
  std::vector<IdentityCheck> identities;
  /// The five equivalent conditions: -1 not an eigenvalue, P = -1, f almost complex, h1 = 1, h2 = 0.
  std::array<bool, 5> conditions{};
  [[nodiscard]] bool conditions_agree() const;
};
Order4Structures order4_structures(const ThetaOperator& theta);

/// Order 5: P, J1, J2, f1, f2, h1, h2 and their relation table.
struct Order5Structures {
  AffinorStructure P, J1, J2, f1, f2, h1, h2;
  /// The eleven product relations J1 P = J2 through h1 h2 = 0.
  std::vector<IdentityCheck> identities;
  /// h1 + h2 = 1, which follows from h1 = (1 + P)/2 and h2 = (1 - P)/2.
  IdentityCheck complement_sum;
  /// h1 + h2 = P read literally; holds only when P = 1.
  IdentityCheck literal_sum;
  /// theta has two distinct eigenvalues, P trivial, J1 = +-J2, one of f1/f2 null and the other a J,
  /// one of h1/h2 trivial and the other null.
  std::array<bool, 5> conditions{};
  [[nodiscard]] bool conditions_agree() const;
  [[nodiscard]] bool all_identities_hold() const;
};

inline constexpr double kAlpha5 = 0.6155367074350507;   // sqrt(5 + 2 sqrt 5) / 5
inline constexpr double kBeta5 = 0.14530850560107215;   // sqrt(5 - 2 sqrt 5) / 5
inline constexpr double kGamma5 = 0.3804226065180614;   // sqrt(10 + 2 sqrt 5) / 10
inline constexpr double kDelta5 = 0.23511410091698925;  // sqrt(10 - 2 sqrt 5) / 10

/// Throws NotOrderFive unless theta comes from an order-5 automorphism.
Order5Structures corollary5_relations(const ThetaOperator& theta);

}  // namespace affinor
