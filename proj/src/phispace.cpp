#include "affinor/phispace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "affinor/errors.hpp"

namespace affinor {

namespace {

constexpr double kUnitTol = 1e-9;
constexpr double kRankTol = 1e-9;

bool is_identity(const std::array<cplx, 3>& s) {
  return std::all_of(s.begin(), s.end(), [](cplx z) { return std::abs(z - 1.0) <= kUnitTol; });
}

std::array<cplx, 3> power(const std::array<cplx, 3>& s, int k) {
  std::array<cplx, 3> out{cplx(1.0), cplx(1.0), cplx(1.0)};
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < 3; ++j) out[j] *= s[j];
  }
  return out;
}

Eigen::MatrixXd block_multiplication(cplx mu) {
  // z -> mu z on (Re z, Im z)
  Eigen::MatrixXd m(2, 2);
  m << mu.real(), -mu.imag(), mu.imag(), mu.real();
  return m;
}

int numeric_rank(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(kRankTol);
  return static_cast<int>(lu.rank());
}

void add_identity(std::vector<IdentityCheck>& out, std::string name, const Eigen::MatrixXd& lhs,
                  const Eigen::MatrixXd& rhs) {
  const double r = operator_distance(lhs, rhs);
  out.push_back({std::move(name), r, r <= kOperatorTol});
}

bool is_zero(const Eigen::MatrixXd& m) { return m.size() == 0 || operator_distance(m, Eigen::MatrixXd::Zero(m.rows(), m.cols())) <= kOperatorTol; }

}  // namespace

std::string to_string(AffinorTag tag) {
  switch (tag) {
    case AffinorTag::J:
      return "J";
    case AffinorTag::P:
      return "P";
    case AffinorTag::f:
      return "f";
    case AffinorTag::h:
      return "h";
    case AffinorTag::other:
      return "other";
  }
  return "other";
}

InnerAutomorphism make_inner_automorphism(const std::array<cplx, 3>& s, int order) {
  for (const cplx& z : s) {
    if (std::abs(std::abs(z) - 1.0) > kUnitTol) throw InvalidInput("diagonal entries of s must have modulus 1");
  }
  if (std::abs(s[0] * s[1] * s[2] - 1.0) > kUnitTol) throw InvalidInput("det s must be 1");
  if (order < 1) throw NotFiniteOrder("order must be a positive integer");
  if (!is_identity(power(s, order))) {
    throw NotFiniteOrder("s^" + std::to_string(order) + " is not the identity");
  }
  for (int k = 1; k < order; ++k) {
    if (is_identity(power(s, k))) {
      throw NotFiniteOrder("s already has order " + std::to_string(k) + ", not " + std::to_string(order));
    }
  }
  return {s, order};
}

double operator_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.size() == 0) return 0.0;
  return (a - b).colwise().norm().maxCoeff();
}

AffinorTag classify_affinor(const Eigen::MatrixXd& op) {
  const auto id = Eigen::MatrixXd::Identity(op.rows(), op.cols());
  if (op.size() == 0 || op.cwiseAbs().maxCoeff() <= kOperatorTol) return AffinorTag::h;
  const Eigen::MatrixXd sq = op * op;
  if (operator_distance(sq, -id) <= kOperatorTol) return AffinorTag::J;
  if (operator_distance(sq, id) <= kOperatorTol) return AffinorTag::P;
  const Eigen::MatrixXd cube = sq * op;
  if (operator_distance(cube, -op) <= kOperatorTol) return AffinorTag::f;
  if (operator_distance(cube, op) <= kOperatorTol) return AffinorTag::h;
  return AffinorTag::other;
}

int AffinorStructure::rank() const { return numeric_rank(op); }

std::optional<std::array<cplx, 3>> AffinorStructure::block_multipliers() const {
  std::array<cplx, 3> out{};
  int offset = 0;
  for (int j = 0; j < 3; ++j) {
    if (!blocks[j]) continue;
    const cplx mu(op(offset, offset), op(offset + 1, offset));
    Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(op.rows(), 2);
    expected.block(offset, 0, 2, 2) = block_multiplication(mu);
    if (operator_distance(op.middleCols(offset, 2), expected) > kOperatorTol) return std::nullopt;
    out[j] = mu;
    offset += 2;
  }
  return out;
}

std::optional<std::array<int, 3>> AffinorStructure::characteristic() const {
  const auto mult = block_multipliers();
  if (!mult) return std::nullopt;
  std::array<int, 3> zeta{};
  for (int j = 0; j < 3; ++j) {
    const cplx mu = (*mult)[j];
    if (std::abs(mu.real()) > kOperatorTol) return std::nullopt;
    const double z = std::round(mu.imag());
    if (std::abs(mu.imag() - z) > kOperatorTol || std::abs(z) > 1.0) return std::nullopt;
    zeta[j] = static_cast<int>(z);
  }
  return zeta;
}

AffinorStructure AffinorStructure::sign_canonical() const {
  AffinorStructure out = *this;
  const auto mult = block_multipliers();
  if (!mult) {
    // First nonzero entry of the matrix decides.
    for (Eigen::Index k = 0; k < op.size(); ++k) {
      const double v = op.data()[k];
      if (std::abs(v) > kOperatorTol) {
        if (v < 0) out.op = -op;
        break;
      }
    }
    return out;
  }
  for (const cplx& mu : *mult) {
    if (std::abs(mu) <= kOperatorTol) continue;
    const double key = std::abs(mu.imag()) > kOperatorTol ? mu.imag() : mu.real();
    if (key < 0) out.op = -op;
    break;
  }
  return out;
}

ThetaOperator::ThetaOperator(const InnerAutomorphism& aut, std::array<cplx, 3> multipliers,
                             std::array<bool, 3> blocks)
    : aut_(aut), multipliers_(multipliers), blocks_(blocks) {
  const int n = 2 * static_cast<int>(std::count(blocks.begin(), blocks.end(), true));
  matrix_ = Eigen::MatrixXd::Zero(n, n);
  int offset = 0;
  for (int j = 0; j < 3; ++j) {
    if (!blocks[j]) continue;
    matrix_.block(offset, offset, 2, 2) = block_multiplication(multipliers[j]);
    offset += 2;
  }

  // theta is semisimple, so its minimal polynomial is the product of the distinct real
  // irreducible factors: one linear factor per real eigenvalue, one quadratic factor per
  // conjugate pair.
  for (int j = 0; j < 3; ++j) {
    if (!blocks[j]) continue;
    for (const cplx& ev : {multipliers[j], std::conj(multipliers[j])}) {
      const bool seen = std::any_of(spectrum_.begin(), spectrum_.end(),
                                    [&](cplx e) { return std::abs(e - ev) <= kUnitTol; });
      if (!seen) spectrum_.push_back(ev);
    }
  }
  int real_eigs = 0;
  int complex_eigs = 0;
  for (const cplx& ev : spectrum_) {
    if (std::abs(ev.imag()) <= kUnitTol)
      ++real_eigs;
    else
      ++complex_eigs;
  }
  quadratic_ = complex_eigs / 2;
  irreducible_ = quadratic_ + real_eigs;
}

Eigen::MatrixXd ThetaOperator::identity() const { return Eigen::MatrixXd::Identity(dim(), dim()); }

Eigen::MatrixXd ThetaOperator::power(int m) const {
  Eigen::MatrixXd out = identity();
  for (int i = 0; i < m; ++i) out = out * matrix_;
  return out;
}

bool ThetaOperator::has_minus_one() const {
  return std::any_of(spectrum_.begin(), spectrum_.end(), [](cplx e) { return std::abs(e + 1.0) <= kUnitTol; });
}

Eigen::MatrixXd ThetaOperator::polynomial(std::span<const double> coeffs) const {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim(), dim());
  Eigen::MatrixXd pw = identity();
  for (double a : coeffs) {
    out += a * pw;
    pw = pw * matrix_;
  }
  return out;
}

AffinorStructure ThetaOperator::structure(Eigen::MatrixXd op) const {
  AffinorStructure s;
  s.tag = classify_affinor(op);
  s.op = std::move(op);
  s.blocks = blocks_;
  return s;
}

Eigen::VectorXd ThetaOperator::coordinates(const TangentVector& x) const {
  Eigen::VectorXd v(dim());
  int offset = 0;
  for (int j = 0; j < 3; ++j) {
    if (!blocks_[j]) continue;
    v(offset) = x[j].real();
    v(offset + 1) = x[j].imag();
    offset += 2;
  }
  return v;
}

TangentVector ThetaOperator::vector(const Eigen::VectorXd& v) const {
  TangentVector x;
  int offset = 0;
  for (int j = 0; j < 3; ++j) {
    if (!blocks_[j]) continue;
    x[j] = cplx(v(offset), v(offset + 1));
    offset += 2;
  }
  return x;
}

Eigen::Matrix<double, 8, 8> adjoint_action(const std::array<cplx, 3>& s) {
  std::array<SuElement, 8> basis;
  basis[0] = E(cplx(0, 1), cplx(0, -1), 0);
  basis[1] = E(0, cplx(0, 1), cplx(0, -1));
  const auto tb = tangent_basis();
  for (int k = 0; k < 6; ++k) basis[k + 2] = SuElement(tb[k]);

  const Eigen::Matrix3cd sm = Eigen::Vector3cd(s[0], s[1], s[2]).asDiagonal();
  const Eigen::Matrix3cd sinv = sm.adjoint();
  Eigen::Matrix<double, 8, 8> ad;
  for (int k = 0; k < 8; ++k) {
    const SuElement img = SuElement::from_matrix(sm * basis[k].to_matrix() * sinv);
    // beta coordinates in the E basis: beta1 = x, beta2 = -x + y.
    ad(0, k) = img.beta(0);
    ad(1, k) = img.beta(0) + img.beta(1);
    const auto v = to_real(img.tangent());
    for (int r = 0; r < 6; ++r) ad(r + 2, k) = v(r);
  }
  return ad;
}

ThetaOperator build_theta(const InnerAutomorphism& aut) {
  const Eigen::MatrixXd a = adjoint_action(aut.s) - Eigen::Matrix<double, 8, 8>::Identity();
  // Regular: A restricted to A g is non-singular, i.e. rank A^2 = rank A.
  const int rank_a = numeric_rank(a);
  if (numeric_rank(a * a) != rank_a) throw RegularityViolation("g != h + A g for this automorphism");

  // (s X s^-1)_{jk} = s_j X_{jk} conj(s_k): a sits at (1,2), b at (2,3), conj(c) at (1,3).
  const auto& s = aut.s;
  const std::array<cplx, 3> mult{s[0] * std::conj(s[1]), s[1] * std::conj(s[2]), std::conj(s[0]) * s[2]};
  std::array<bool, 3> blocks{};
  for (int j = 0; j < 3; ++j) blocks[j] = std::abs(mult[j] - 1.0) > kUnitTol;

  ThetaOperator theta(aut, mult, blocks);
  if (theta.dim() != rank_a) throw RegularityViolation("dim m does not match rank of Ad(s) - id");
  if (operator_distance(theta.power(aut.order), theta.identity()) > kOperatorTol) {
    throw NotFiniteOrder("theta^k != id on m");
  }
  return theta;
}

int coefficient_count(int k) { return (k % 2 == 1) ? (k - 1) / 2 : k / 2 - 1; }

AffinorStructure canonical_f(const ThetaOperator& theta, std::span<const int> zeta, int k) {
  const int u = coefficient_count(k);
  if (static_cast<int>(zeta.size()) != u) {
    throw ArityMismatch("canonical_f: expected " + std::to_string(u) + " coefficients for k=" + std::to_string(k));
  }
  if (std::all_of(zeta.begin(), zeta.end(), [](int z) { return z == 0; })) {
    throw AllZeroCoefficients("canonical_f: all coefficients are zero");
  }
  for (int z : zeta) {
    if (z < -1 || z > 1) throw InvalidInput("canonical_f: coefficients must be in {-1, 0, 1}");
  }
  std::vector<double> coeffs(static_cast<std::size_t>(k), 0.0);
  for (int m = 1; m <= u; ++m) {
    double w = 0.0;
    for (int j = 1; j <= u; ++j) w += zeta[j - 1] * std::sin(2.0 * std::numbers::pi * m * j / k);
    w *= 2.0 / k;
    coeffs[m] += w;
    coeffs[k - m] -= w;
  }
  return theta.structure(theta.polynomial(coeffs));
}

AffinorStructure canonical_h(const ThetaOperator& theta, std::span<const int> xi, int k) {
  const int u = coefficient_count(k);
  const bool even = k % 2 == 0;
  const int expected = u + (even ? 1 : 0);
  if (static_cast<int>(xi.size()) != expected) {
    throw ArityMismatch("canonical_h: expected " + std::to_string(expected) + " coefficients for k=" +
                        std::to_string(k));
  }
  for (int x : xi) {
    if (x < -1 || x > 1) throw InvalidInput("canonical_h: coefficients must be in {-1, 0, 1}");
  }
  std::vector<double> coeffs(static_cast<std::size_t>(k), 0.0);
  for (int m = 0; m < k; ++m) {
    double w = 0.0;
    for (int j = 1; j <= u; ++j) w += 2.0 * xi[j - 1] * std::cos(2.0 * std::numbers::pi * m * j / k);
    if (even) w += (m % 2 == 0 ? 1.0 : -1.0) * xi[u];
    coeffs[m] = w / k;
  }
  return theta.structure(theta.polynomial(coeffs));
}

StructureCounts predicted_counts(int quadratic, int irreducible) {
  auto pow_int = [](int base, int e) {
    int r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
  };
  StructureCounts c;
  // With m = 0 the counts 2^0 are vacuous: the only operator is zero, tagged h.
  c.P = irreducible > 0 ? pow_int(2, irreducible) : 0;
  c.J = (quadratic == irreducible && quadratic > 0) ? pow_int(2, quadratic) : 0;
  c.f = quadratic > 0 ? pow_int(3, quadratic) - 1 : 0;
  c.h = pow_int(3, irreducible);
  return c;
}

namespace {

// All vectors in {-1, 0, 1}^n in lexicographic order.
std::vector<std::vector<int>> ternary_vectors(int n) {
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& v : out) {
      for (int z : {-1, 0, 1}) {
        auto w = v;
        w.push_back(z);
        next.push_back(std::move(w));
      }
    }
    out = std::move(next);
  }
  return out;
}

bool contains_operator(const std::vector<AffinorStructure>& list, const Eigen::MatrixXd& op) {
  return std::any_of(list.begin(), list.end(),
                     [&](const AffinorStructure& s) { return operator_distance(s.op, op) <= kOperatorTol; });
}

}  // namespace

CanonicalCatalog enumerate_canonical(const ThetaOperator& theta, int k) {
  CanonicalCatalog cat;
  const int u = coefficient_count(k);

  for (const auto& zeta : ternary_vectors(u)) {
    if (std::all_of(zeta.begin(), zeta.end(), [](int z) { return z == 0; })) continue;
    AffinorStructure f = canonical_f(theta, zeta, k);
    const int r = f.rank();
    cat.f_coefficient_ranks.push_back(r);
    if (is_zero(f.op) || contains_operator(cat.f_structures, f.op)) continue;
    cat.f_structures.push_back(std::move(f));
  }
  for (const auto& xi : ternary_vectors(u + (k % 2 == 0 ? 1 : 0))) {
    AffinorStructure h = canonical_h(theta, xi, k);
    if (contains_operator(cat.h_structures, h.op)) continue;
    cat.h_structures.push_back(std::move(h));
  }

  cat.observed.f = static_cast<int>(cat.f_structures.size());
  cat.observed.h = static_cast<int>(cat.h_structures.size());
  cat.observed.J = static_cast<int>(std::count_if(cat.f_structures.begin(), cat.f_structures.end(),
                                                  [](const AffinorStructure& s) { return s.tag == AffinorTag::J; }));
  cat.observed.P = static_cast<int>(std::count_if(cat.h_structures.begin(), cat.h_structures.end(),
                                                  [](const AffinorStructure& s) { return s.tag == AffinorTag::P; }));
  cat.predicted = predicted_counts(theta.quadratic_factors(), theta.irreducible_factors());

  std::vector<AffinorStructure> reps;
  for (const auto& f : cat.f_structures) {
    const auto rep = f.sign_canonical();
    if (!contains_operator(reps, rep.op)) reps.push_back(rep);
  }
  cat.f_up_to_sign = static_cast<int>(reps.size());
  return cat;
}

Order3Structures order3_structures(const ThetaOperator& theta) {
  if (theta.order() != 3) throw NotFiniteOrder("order-3 structures need an order-3 automorphism");
  Order3Structures out;
  const double w = 1.0 / std::sqrt(3.0);
  const std::array<double, 3> cj{0.0, w, -w};
  out.J = theta.structure(theta.polynomial(cj));
  out.P = theta.structure(theta.identity());
  const auto id = theta.identity();
  add_identity(out.identities, "J^2 = -1", out.J.op * out.J.op, -id);
  add_identity(out.identities, "P^2 = 1", out.P.op * out.P.op, id);
  return out;
}

bool Order4Structures::conditions_agree() const {
  return std::all_of(conditions.begin(), conditions.end(), [&](bool c) { return c == conditions[0]; });
}

Order4Structures order4_structures(const ThetaOperator& theta) {
  if (theta.order() != 4) throw NotFiniteOrder("order-4 structures need an order-4 automorphism");
  Order4Structures out;
  const auto id = theta.identity();
  const auto t2 = theta.power(2);
  out.P = theta.structure(t2);
  out.f = theta.structure(0.5 * (theta.matrix() - theta.power(3)));
  out.h1 = theta.structure(0.5 * (id - t2));
  out.h2 = theta.structure(0.5 * (id + t2));

  add_identity(out.identities, "h1 + h2 = 1", out.h1.op + out.h2.op, id);
  add_identity(out.identities, "h1^2 = h1", out.h1.op * out.h1.op, out.h1.op);
  add_identity(out.identities, "h2^2 = h2", out.h2.op * out.h2.op, out.h2.op);
  add_identity(out.identities, "P^2 = 1", out.P.op * out.P.op, id);
  add_identity(out.identities, "f^3 + f = 0", out.f.op * out.f.op * out.f.op + out.f.op,
               Eigen::MatrixXd::Zero(id.rows(), id.cols()));

  out.conditions = {!theta.has_minus_one(), operator_distance(out.P.op, -id) <= kOperatorTol,
                    out.f.tag == AffinorTag::J, operator_distance(out.h1.op, id) <= kOperatorTol, is_zero(out.h2.op)};
  return out;
}

bool Order5Structures::conditions_agree() const {
  return std::all_of(conditions.begin(), conditions.end(), [&](bool c) { return c == conditions[0]; });
}

bool Order5Structures::all_identities_hold() const {
  return complement_sum.holds &&
         std::all_of(identities.begin(), identities.end(), [](const IdentityCheck& c) { return c.holds; });
}

Order5Structures corollary5_relations(const ThetaOperator& theta) {
  if (theta.order() != 5) throw NotOrderFive("relation table needs an order-5 automorphism");
  Order5Structures out;
  const auto id = theta.identity();
  const auto zero = Eigen::MatrixXd::Zero(id.rows(), id.cols()).eval();
  const auto t1 = theta.power(1);
  const auto t2 = theta.power(2);
  const auto t3 = theta.power(3);
  const auto t4 = theta.power(4);
  const Eigen::MatrixXd odd1 = t1 - t4;
  const Eigen::MatrixXd odd2 = t2 - t3;

  out.P = theta.structure((t1 - t2 - t3 + t4) / std::sqrt(5.0));
  out.J1 = theta.structure(kAlpha5 * odd1 - kBeta5 * odd2);
  out.J2 = theta.structure(kBeta5 * odd1 + kAlpha5 * odd2);
  out.f1 = theta.structure(kGamma5 * odd1 + kDelta5 * odd2);
  out.f2 = theta.structure(kDelta5 * odd1 - kGamma5 * odd2);
  out.h1 = theta.structure(0.5 * (id + out.P.op));
  out.h2 = theta.structure(0.5 * (id - out.P.op));

  const auto& P = out.P.op;
  const auto& J1 = out.J1.op;
  const auto& J2 = out.J2.op;
  const auto& f1 = out.f1.op;
  const auto& f2 = out.f2.op;
  const auto& h1 = out.h1.op;
  const auto& h2 = out.h2.op;
  auto& ids = out.identities;
  add_identity(ids, "J1 P = J2", J1 * P, J2);
  add_identity(ids, "f1 P = f1", f1 * P, f1);
  add_identity(ids, "J1 h1 = f1", J1 * h1, f1);
  add_identity(ids, "J2 h1 = f1", J2 * h1, f1);
  add_identity(ids, "h1 P = h1", h1 * P, h1);
  add_identity(ids, "h2 P = -h2", h2 * P, -h2);
  add_identity(ids, "f2 P = -f2", f2 * P, -f2);
  add_identity(ids, "J2 h2 = -f2", J2 * h2, -f2);
  add_identity(ids, "-J1 h2 = -f2", -J1 * h2, -f2);
  add_identity(ids, "f1 f2 = 0", f1 * f2, zero);
  add_identity(ids, "h1 h2 = 0", h1 * h2, zero);

  const double rc = operator_distance(h1 + h2, id);
  out.complement_sum = {"h1 + h2 = 1", rc, rc <= kOperatorTol};
  const double r = operator_distance(h1 + h2, P);
  out.literal_sum = {"h1 + h2 = P", r, r <= kOperatorTol};

  const bool p_trivial = operator_distance(P, id) <= kOperatorTol || operator_distance(P, -id) <= kOperatorTol;
  const bool j_coincide = operator_distance(J1, J2) <= kOperatorTol || operator_distance(J1, -J2) <= kOperatorTol;
  auto is_j_among = [&](const Eigen::MatrixXd& f) {
    return classify_affinor(f) == AffinorTag::J &&
           (operator_distance(f, J1) <= kOperatorTol || operator_distance(f, -J1) <= kOperatorTol ||
            operator_distance(f, J2) <= kOperatorTol || operator_distance(f, -J2) <= kOperatorTol);
  };
  const bool f_split = (is_zero(f1) && is_j_among(f2)) || (is_zero(f2) && is_j_among(f1));
  const bool h_split = (is_zero(h1) && operator_distance(h2, id) <= kOperatorTol) ||
                       (is_zero(h2) && operator_distance(h1, id) <= kOperatorTol);
  out.conditions = {theta.spectrum().size() == 2, p_trivial, j_coincide, f_split, h_split};
  return out;
}

}  // namespace affinor
