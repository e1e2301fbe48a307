#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nilcontact/contact.hpp"

namespace nilcontact {

// (phi1, phi2, phi3) in n* = (V* (x) W) + V + W, the duals of n1, n2, n3 identified
// through omega on the W factors.
struct MomentPoint {
  std::array<Covec, 2> phi1;  // phi1[a] is the V*-coefficient of (x) f_a
  Vec phi2;
  std::array<Scalar, 2> phi3;

  static MomentPoint zero(std::size_t p);
};

// omega(phi1, phi3) == c(phi2, phi2, .), contracting the W factor of phi1 with phi3.
bool moment_membership(const MomentPoint& m, const SymCubic& t);
// Left side of the equation, for diagnostics.
Covec moment_contraction(const MomentPoint& m);

// Element of g = n + sl(W).
struct GElem {
  NElem n;
  SlWElem s;

  static GElem from_n(NElem x) { return {std::move(x), SlWElem()}; }
  static GElem from_slw(std::size_t p, SlWElem s) { return {NElem::zero(p), std::move(s)}; }
};

// Velocity of the A-action at pt in chart coordinates. The dy component (the lift to
// L^x) is left at zero: the contact form has no dy term.
ChartTangent fundamental_field(const ChartPoint& pt, const GElem& a, const NilpotentAlgebra& alg);

// theta~ on the fundamental field of A. Requires y != 0 and the assumption.
Scalar moment_of(const ChartPoint& pt, const GElem& a, const NilpotentAlgebra& alg);

// Values of moment_of on the basis of n, arranged as an element of n*.
MomentPoint assemble_moment_point(const ChartPoint& pt, const NilpotentAlgebra& alg);

struct ProbeConfig {
  std::vector<std::uint64_t> primes{5, 7, 11, 13};
  std::uint64_t budget = 1'000'000;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct ProbeWitness {
  std::uint64_t q;
  std::vector<std::uint64_t> v;
};

struct ProbePrimeRun {
  std::uint64_t q;
  std::string mode;  // exhaustive | random | skipped
  std::uint64_t trials = 0;
  std::string note;
};

struct ProbeVerdict {
  std::string cubic_hash;
  std::vector<ProbePrimeRun> runs;
  std::optional<ProbeWitness> witness;

  bool found() const { return witness.has_value(); }
  // "exhaustive" when every prime that ran was enumerated completely, else "random".
  std::string mode() const;
  std::uint64_t trials() const;
  // "witness-found" or "none-found"
  std::string verdict_class() const { return found() ? "witness-found" : "none-found"; }
};

// Search for v != 0 over F_q with B(v, v) = 0. Primes dividing 6 or any nonzero entry
// (numerator or denominator) are skipped; a witness there would say nothing about the
// cubic over Q. Stops at the first prime that yields a witness.
ProbeVerdict smoothness_probe(const SymCubic& t, const ProbeConfig& cfg);
nlohmann::json to_json(const ProbeVerdict& v);

struct BoundaryReport {
  ProbeVerdict probe;
  std::size_t p = 0;
  std::size_t dim_image = 0;                      // 2p + 2
  std::optional<std::size_t> boundary_parameters; // 2p, when no witness was found
  bool codim2_supported = false;
  bool argument_inapplicable = false;
};

BoundaryReport boundary_report(const SymCubic& t, const ProbeConfig& cfg);
nlohmann::json to_json(const BoundaryReport& r);

}  // namespace nilcontact
