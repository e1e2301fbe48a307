#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nilcontact/bch.hpp"
#include "nilcontact/linalg.hpp"
#include "nilcontact/polynomial.hpp"
#include "nilcontact/rng.hpp"

namespace nilcontact {

// Point of L^x over the chart: x(X, p) with p = f_1 + z f_2, fibre coordinate y
// against the section f_2^* - z f_1^*.
struct ChartPoint {
  ChartElem chart;
  Scalar z;
  Scalar y;

  std::size_t dim() const { return chart.dim(); }
  // (y, z, X3^1, X3^2, X1_1..X1_p, X2_1..X2_p), length 2p + 4.
  Vec coordinates() const;
  static ChartPoint from_coordinates(std::size_t p, const Vec& c);
  static ChartPoint base(std::size_t p, Scalar y = 1);
};

// Tangent vector at a chart point, in the same coordinate order.
struct ChartTangent {
  Scalar dy;
  Scalar dz;
  ChartElem dchart;
};

// Index helpers for the 2p + 4 coordinates.
struct ChartIndex {
  std::size_t p;
  std::size_t y() const { return 0; }
  std::size_t z() const { return 1; }
  std::size_t x3_1() const { return 2; }
  std::size_t x3_2() const { return 3; }
  std::size_t x1(std::size_t i) const { return 4 + i; }
  std::size_t x2(std::size_t i) const { return 4 + p + i; }
  std::size_t size() const { return 2 * p + 4; }
};

// Contact form at x(X, l) applied to Z in n_m, modulo l: the f_2-coefficient of the
// degree-3 part of e_X^{-1}(Z).
Scalar theta(const ChartElem& x, const ChartElem& z, const NilpotentAlgebra& alg);

// Pullback of theta to L^x applied to a tangent vector, by the same route.
Scalar theta_tilde(const ChartPoint& pt, const ChartTangent& v, const NilpotentAlgebra& alg);

// The pullback as a polynomial 1-form: coefficient of d(coordinate k), k in chart order.
std::vector<MPoly> theta_tilde_form(std::size_t p);

class SkewMatrix {
public:
  // Throws InputError unless m is square, of even size and exactly antisymmetric.
  explicit SkewMatrix(Matrix m);

  std::size_t dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  Scalar determinant() const;
  Scalar pairing(const Vec& a, const Vec& b) const;

private:
  Matrix m_;
};

// d(theta~) at pt: entry (j, k) is d_j a_k - d_k a_j for the form above.
// Throws PreconditionError when y = 0.
SkewMatrix dtheta_matrix(const ChartPoint& pt);

// Random interior chart point with y != 0.
ChartPoint random_chart_point(std::size_t p, Rng& rng);

struct NondegeneracyReport {
  std::string cubic_hash;
  std::size_t p = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  bool assumption_ok = false;
  std::vector<Scalar> determinants;
  std::size_t min_abs_det_num_digits = 0;
  std::vector<std::uint64_t> failures;  // sample indices with zero determinant

  bool pass() const { return failures.empty(); }
};

// Runs whether or not the assumption holds (the form does not involve c); the flag is
// carried in the report.
NondegeneracyReport nondegeneracy_certificate(const NilpotentAlgebra& alg, std::uint64_t samples, std::uint64_t seed);
nlohmann::json to_json(const NondegeneracyReport& r);

// Tangent vector to X_c at the base point in (z, X3^1, X3^2, X1, X2) coordinates,
// length 2p + 3. It lies in D iff its X3^1 coordinate is zero.
struct DVector {
  Scalar dz;
  ChartElem dchart;
  bool in_d() const { return dchart.x3[0] == 0; }
};

// Restriction of d(theta~) at the base point (y = 1) to D. Throws PreconditionError
// if an argument is not in D.
Scalar symplectic_pairing_D(const DVector& a, const DVector& b, std::size_t p);
// Gram matrix of the pairing on the basis z, X3^2, X1_i, X2_i of D.
Matrix pairing_matrix_D(std::size_t p);

// Homogeneous coordinates [v : b : c : t] in P(V + V* + Q + Q).
struct ProjectivePoint {
  Vec v;
  Covec b;
  Scalar c;
  Scalar t;

  Vec coordinates() const;
  bool is_zero() const;
  // Equality as points of projective space.
  bool same_point(const ProjectivePoint& o) const;
};

ProjectivePoint tau(const Vec& v, const SymCubic& t);
// [t^2 v : t B(v, v) : c(v) : t^3], and its limit along the curve at t = 0.
// Throws InputError when v = 0 and t = 0.
ProjectivePoint tau_closure_sample(const Vec& v, const Scalar& t, const SymCubic& cubic);

// Constants with z-coefficient of (X1, X2, X3^2) along the line of v equal to
// (s1 v, s2 B(v, v), s3 c(v)). Obtained once from an exact solve for the cubic x^3.
struct LineConstants {
  Scalar s1, s2, s3;
};
const LineConstants& line_expansion_constants();

// True iff the degree-1 part of solve_line_coordinates(v) is (s1 v, s2 B, s3 c) with
// zero X3^1 component, i.e. the tangent of the line is tau(v) up to these constants.
bool tau_matches_line_expansion(const Vec& v, const NilpotentAlgebra& alg,
                                const LineConstants& s = line_expansion_constants());

}  // namespace nilcontact
