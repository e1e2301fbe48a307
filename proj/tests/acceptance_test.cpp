// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Every comparison is exact over Q; the pinned numbers below are the whole contract.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "nilcontact/catalog.hpp"
#include "nilcontact/errors.hpp"

using namespace nilcontact;

namespace {

constexpr std::uint64_t kSamples = 100;
constexpr std::uint64_t kSeed = 20;
constexpr std::size_t kNondegMaxP = 9;
const Scalar kDisplayedCoefficient(5, 12);
const Scalar kS1(1), kS2(1, 2), kS3(1, 6);  // |s1|, |s2|, |s3|
const std::vector<std::size_t> kJordanPs{1, 3, 6, 9, 15, 27};
const std::vector<std::pair<std::string, std::size_t>> kExceptional{
    {"G2", 1}, {"F4", 6}, {"E6", 9}, {"E7", 15}, {"E8", 27}};
const std::vector<std::pair<std::string, long>> kTernary{{"G2", 0}, {"F4", 8}, {"E6", 16}, {"E7", 35}, {"E8", 78}};
const std::vector<std::pair<std::string, std::string>> kPairs{
    {"x3", "G2"}, {"det-sym-3", "F4"}, {"det3", "E6"}, {"pfaff6", "E7"}, {"j3o-norm", "E8"}};
const std::vector<std::pair<std::string, std::string>> kMismatched{{"x3", "F4"}, {"det3", "F4"}, {"pfaff6", "E6"}};

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

NElem random_n(std::size_t p, Rng& rng) { return n_from_coordinates(p, rng.vec(n_dim(p))); }

NElem random_chart_n(std::size_t p, Rng& rng) {
  NElem x = random_n(p, rng);
  x.n1[kEll] = zero_vec(p);
  return x;
}

// The displayed grade-by-grade inversion of e_X.
NElem displayed_inverse(const NElem& x, const NElem& z, const SymCubic& t) {
  const NElem x1 = x.grade(1), x2 = x.grade(2);
  const NElem z1 = z.grade(1), z2 = z.grade(2), z3 = z.grade(3);
  NElem y = z1;
  y += z2 - Scalar(1, 2) * bracket(x1, z1, t);
  y += z3 - Scalar(1, 2) * bracket(x1, z2, t) - Scalar(1, 2) * bracket(x2, z1, t) +
       kDisplayedCoefficient * bracket(x1, bracket(x1, z1, t), t);
  return y;
}

Outcome jacobi() {
  Outcome o;
  std::vector<std::size_t> seen;
  for (const auto& e : catalog_list()) {
    const JacobiReport r = verify_jacobi(e.build());
    o.require(r.pass(), e.name + ": " + std::to_string(r.violations.size()) + " violations");
    o.require(r.triples_checked == r.dim_n * r.dim_n * r.dim_n, e.name + ": enumeration incomplete");
    seen.push_back(e.p);
  }
  for (std::size_t p : kJordanPs) o.require(std::find(seen.begin(), seen.end(), p) != seen.end(), "no cubic with p = " + std::to_string(p));
  if (o.pass) o.detail = std::to_string(catalog_list().size()) + " cubics, full enumeration";
  return o;
}

Outcome dimensions() {
  Outcome o;
  for (const auto& e : catalog_list()) {
    const DimReport d = dim_report(e.build());
    o.require(d.consistent && d.dim_group_plus_one_minus_p == 2 * e.p + 3 && d.dim_n == 3 * e.p + 2, e.name);
  }
  if (o.pass) o.detail = "dim N + 1 - p = 2p + 3 for every catalog cubic";
  return o;
}

Outcome group_law() {
  Outcome o;
  for (const auto& e : catalog_list()) {
    const SymCubic t = e.build();
    const std::size_t p = t.dim();
    const GroupElem id = GroupElem::identity(p);
    Rng rng(kSeed);
    for (std::uint64_t s = 0; s < kSamples && o.pass; ++s) {
      const GroupElem a{random_n(p, rng)}, b{random_n(p, rng)}, c{random_n(p, rng)};
      o.require(group_mul(group_mul(a, b, t), c, t) == group_mul(a, group_mul(b, c, t), t), e.name + ": associativity");
      o.require(group_mul(a, id, t) == a && group_mul(id, a, t) == a, e.name + ": identity");
      o.require(group_mul(a, group_inv(a), t) == id && group_mul(group_inv(a), a, t) == id, e.name + ": inverse");
      o.require(bch(a.log, -a.log, t).is_zero(), e.name + ": H(X, -X) != 0");
    }
  }
  if (o.pass) o.detail = std::to_string(kSamples) + " triples per cubic";
  return o;
}

Outcome exp_differential() {
  Outcome o;
  for (const auto& e : catalog_list()) {
    const SymCubic t = e.build();
    const std::size_t p = t.dim();
    Rng rng(kSeed + 1);
    const NElem x = random_n(p, rng);
    for (std::size_t k = 0; k < n_dim(p); ++k) {
      const NElem z = n_basis(p, k);
      o.require(exp_diff(x, exp_diff_inv(x, z, t), t) == z, e.name + ": basis vector " + std::to_string(k));
    }
    for (std::uint64_t s = 0; s < kSamples; ++s) {
      const NElem xs = random_n(p, rng), z = random_n(p, rng);
      o.require(exp_diff(xs, exp_diff_inv(xs, z, t), t) == z, e.name + ": sample " + std::to_string(s));
    }
    for (std::uint64_t s = 0; s < kSamples; ++s) {
      const NElem xs = random_chart_n(p, rng), z = random_chart_n(p, rng);
      o.require(bracket(xs.grade(1), z.grade(1), t).is_zero(), e.name + ": chart sample has [X1, Z1] != 0");
      o.require(exp_diff_inv(xs, z, t) == displayed_inverse(xs, z, t),
                e.name + ": solver differs from the displayed inversion on the chart");
    }
  }
  if (o.pass) o.detail = "round trips exact; chart subspace agrees with the 5/12 display";
  return o;
}

Outcome contact() {
  Outcome o;
  std::size_t cubics = 0;
  for (const auto& e : catalog_list()) {
    if (e.p > kNondegMaxP) continue;
    ++cubics;
    const NondegeneracyReport r = nondegeneracy_certificate(NilpotentAlgebra(e.build()), kSamples, kSeed);
    o.require(r.pass() && r.determinants.size() == kSamples, e.name + ": zero determinant");
    for (const Scalar& y : {Scalar(1), Scalar(2), Scalar(-3, 5)}) {
      const std::size_t p = e.p;
      const ChartIndex ix{p};
      Matrix want(ix.size(), ix.size());
      auto put = [&](std::size_t a, std::size_t b, const Scalar& v) {
        want(a, b) = v;
        want(b, a) = -v;
      };
      put(ix.y(), ix.x3_1(), 1);
      put(ix.z(), ix.x3_2(), -y);
      for (std::size_t i = 0; i < p; ++i) put(ix.x2(i), ix.x1(i), y);
      o.require(dtheta_matrix(ChartPoint::base(p, y)).matrix() == want, e.name + ": base point display");
    }
  }
  if (o.pass) o.detail = std::to_string(cubics) + " cubics x " + std::to_string(kSamples) + " points";
  return o;
}

Outcome tangent_map() {
  Outcome o;
  const LineConstants& s = line_expansion_constants();
  o.require(abs(s.s1) == kS1 && abs(s.s2) == kS2 && abs(s.s3) == kS3, "constant magnitudes");
  for (const auto& e : catalog_list()) {
    const NilpotentAlgebra alg(e.build());
    Rng rng(kSeed + 2);
    for (std::uint64_t k = 0; k < kSamples && o.pass; ++k) {
      const Vec v = rng.vec(alg.p());
      o.require(tau_matches_line_expansion(v, alg, s), e.name + ": sample " + std::to_string(k));
    }
  }
  if (o.pass) {
    std::ostringstream d;
    d << "s = (" << s.s1 << ", " << s.s2 << ", " << s.s3 << ") for every cubic and sample";
    o.detail = d.str();
  }
  return o;
}

ProbeConfig probe(std::vector<std::uint64_t> primes) {
  ProbeConfig c;
  c.primes = std::move(primes);
  return c;
}

Outcome moment() {
  Outcome o;
  for (const auto& e : catalog_list()) {
    const NilpotentAlgebra alg(e.build());
    Rng rng(kSeed + 3);
    for (std::uint64_t k = 0; k < kSamples && o.pass; ++k) {
      const MomentPoint m = assemble_moment_point(random_chart_point(alg.p(), rng), alg);
      o.require(moment_membership(m, alg.cubic()), e.name + ": off the variety");
      o.require(!(m.phi3[0] == 0 && m.phi3[1] == 0), e.name + ": phi3 = 0");
    }
  }
  const ProbeVerdict fermat = smoothness_probe(cubic_fermat(3), probe({5, 7, 11}));
  o.require(!fermat.found() && fermat.mode() == "exhaustive", "Fermat: " + fermat.verdict_class() + " (" + fermat.mode() + ")");
  const ProbeVerdict ds = smoothness_probe(cubic_det_sym3(), ProbeConfig{});
  o.require(ds.found(), "det-sym-3: no witness");
  if (o.pass) o.detail = "membership exact; Fermat none-found (exhaustive); det-sym-3 witness at q = " +
                         std::to_string(ds.witness->q);
  return o;
}

Outcome extraction() {
  Outcome o;
  for (const auto& [name, p] : kExceptional) {
    const ChevalleyAlgebra alg(RootSystem::parse(name));
    const RootSystem& rs = alg.roots();
    int candidates = 0;
    for (int i = 0; i < rs.rank(); ++i) candidates += rs.is_root(rs.highest_root() - rs.simple_root(i));
    o.require(candidates == 1, name + ": alpha not unique");
    const Extraction ex = extract_cubic(alg);
    o.require(ex.grading.piece(1, 1).size() == p, name + ": dim g(1,1)");
    o.require(ex.pairings.pass(), name + ": pairing rank");
    o.require(b_rank(ex.cubic) == p, name + ": b_rank");
    if (name == "G2") o.require(ex.cubic == cubic_x3(), "G2 cubic is not x^3");
  }
  try {
    find_alpha(RootSystem::parse("A3"));
    o.require(false, "A3 accepted");
  } catch (const TypeRejected& e) {
    const std::string msg = e.what();
    o.require(msg.find("alpha_1") != std::string::npos && msg.find("alpha_3") != std::string::npos,
              "A3 diagnostic does not name both candidates: " + msg);
  }
  if (o.pass) o.detail = "G2 F4 E6 E7 E8 extracted, A3 rejected";
  return o;
}

Outcome embedding() {
  Outcome o;
  std::string names;
  for (const auto& [name, p] : kExceptional) {
    const ChevalleyAlgebra alg(RootSystem::parse(name));
    const EmbeddingReport r = verify_embedding(alg, extract_cubic(alg));
    o.require(r.pass && r.dim_n == 3 * p + 2, name + ": " + r.first_mismatch);
    names += (names.empty() ? "" : " ") + name;
  }
  if (o.pass) o.detail = "graded isomorphism up to one scalar for " + names;
  return o;
}

Outcome ternary() {
  Outcome o;
  std::string dims;
  for (const auto& [name, h] : kTernary) {
    const ChevalleyAlgebra alg(RootSystem::parse(name));
    const TernaryReport r = ternary_dimension_check(alg, extract_cubic(alg));
    o.require(r.dim_h == h && r.consistent, name + ": dim h = " + std::to_string(r.dim_h));
    dims += (dims.empty() ? "" : ", ") + std::to_string(r.dim_h);
  }
  if (o.pass) o.detail = "dim h = " + dims;
  return o;
}

Outcome signatures() {
  Outcome o;
  const ProbeConfig cfg;
  for (const auto& [entry, algebra] : kPairs) {
    const ComparisonReport r =
        compare_to_extraction(find_catalog_entry(entry), ChevalleyAlgebra(RootSystem::parse(algebra)), cfg);
    o.require(r.consistent(), entry + " vs " + algebra + ": " + (r.mismatches.empty() ? "" : r.mismatches[0]));
  }
  for (const auto& [entry, algebra] : kMismatched) {
    const ComparisonReport r =
        compare_to_extraction(find_catalog_entry(entry), ChevalleyAlgebra(RootSystem::parse(algebra)), cfg);
    o.require(!r.consistent(), entry + " vs " + algebra + " not detected");
  }
  if (o.pass) o.detail = "5 pairs consistent, " + std::to_string(kMismatched.size()) + " mismatches detected";
  return o;
}

std::string cli_output(const std::vector<std::string>& args, int& code) {
  std::vector<const char*> argv{"nilcontact"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::vector<std::string>> runs{
      {"--format", "json", "verify", "--catalog", "det-sym-3", "--which", "all"},
      {"--format", "json", "--seed", "7", "--samples", "20", "verify", "--catalog", "xyz"},
      {"--format", "json", "--out", "acceptance-out", "extract", "--type", "F4", "--compare", "det-sym-3"},
  };
  for (const auto& args : runs) {
    int c1 = 0, c2 = 0;
    const std::string a = cli_output(args, c1), b = cli_output(args, c2);
    o.require(c1 == 0 && c2 == 0, args[3] + ": exit code");
    o.require(!a.empty() && a == b, args[3] + ": reports differ");
  }
  if (o.pass) o.detail = std::to_string(runs.size()) + " report pairs byte-identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Jacobi identity on catalog cubics", jacobi},
      {"dimension formula", dimensions},
      {"group law", group_law},
      {"exponential differential", exp_differential},
      {"contact nondegeneracy", contact},
      {"tangent map consistency", tangent_map},
      {"moment variety", moment},
      {"extraction", extraction},
      {"embedding", embedding},
      {"ternary dimensions", ternary},
      {"signature consistency", signatures},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << o.detail << " ("
              << static_cast<long>(secs * 1000) << " ms)" << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
