#include "nilcontact/moment.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "nilcontact/errors.hpp"

namespace nilcontact {

MomentPoint MomentPoint::zero(std::size_t p) { return {{Covec(p), Covec(p)}, zero_vec(p), {Scalar(0), Scalar(0)}}; }

Covec moment_contraction(const MomentPoint& m) {
  const std::size_t p = m.phi2.size();
  require_dim(m.phi1[0].dim(), p, "moment_contraction");
  require_dim(m.phi1[1].dim(), p, "moment_contraction");
  Covec out(p);
  for (std::size_t a = 0; a < 2; ++a) {
    // omega(phi3, f_a)
    const Scalar w = m.phi3[0] * omega(0, a) + m.phi3[1] * omega(1, a);
    if (w != 0) out += w * m.phi1[a];
  }
  return out;
}

bool moment_membership(const MomentPoint& m, const SymCubic& t) {
  require_dim(m.phi2.size(), t.dim(), "moment_membership");
  return moment_contraction(m) == polarize(t, m.phi2, m.phi2);
}

ChartTangent fundamental_field(const ChartPoint& pt, const GElem& a, const NilpotentAlgebra& alg) {
  const std::size_t p = alg.p();
  require_dim(pt.dim(), p, "fundamental_field");
  require_dim(a.n.dim(), p, "fundamental_field");
  const SymCubic& t = alg.cubic();
  const NElem x = pt.chart.to_nelem();

  // d/dt of log(exp(tA) exp(X)) at t = 0, plus the derivation part of sl(W).
  const NElem ax = bracket(a.n, x, t);
  NElem vel = a.n + Scalar(1, 2) * ax;
  vel -= Scalar(1, 12) * bracket(x, ax, t);
  vel += act_slw(a.s, x);

  // Motion of p = f_1 + z f_2 under sl(W), renormalised to f_1-coefficient one.
  const SlWElem& g = a.s;
  const Scalar dz = g(1, 0) + g(1, 1) * pt.z - pt.z * (g(0, 0) + g(0, 1) * pt.z);

  // Split off the part tangent to the stabiliser: vel = vel' + e_X(u (x) p).
  NElem stab = NElem::zero(p);
  stab.n1[kEll] = vel.n1[kEll];
  stab.n1[kEm] = pt.z * vel.n1[kEll];
  const NElem chart_vel = vel - exp_diff(x, stab, t);
  return {Scalar(0), dz, ChartElem::from_nelem(chart_vel)};
}

Scalar moment_of(const ChartPoint& pt, const GElem& a, const NilpotentAlgebra& alg) {
  alg.require_assumption("moment_of");
  if (pt.y == 0) throw PreconditionError("moment_of: fibre coordinate y is zero");
  return theta_tilde(pt, fundamental_field(pt, a, alg), alg);
}

MomentPoint assemble_moment_point(const ChartPoint& pt, const NilpotentAlgebra& alg) {
  const std::size_t p = alg.p();
  MomentPoint m = MomentPoint::zero(p);
  auto mu = [&](std::size_t index) { return moment_of(pt, GElem::from_n(n_basis(p, index)), alg); };
  // basis order: e_i (x) f_1, e_i (x) f_2, eps_i, f_1, f_2
  for (std::size_t i = 0; i < p; ++i) {
    m.phi1[kEm][i] = 2 * mu(i);
    m.phi1[kEll][i] = -2 * mu(p + i);
    m.phi2[i] = mu(2 * p + i);
  }
  m.phi3 = {mu(3 * p + 1), -mu(3 * p)};
  return m;
}

std::string ProbeVerdict::mode() const {
  for (const auto& r : runs) {
    if (r.mode == "random") return "random";
  }
  return "exhaustive";
}

std::uint64_t ProbeVerdict::trials() const {
  std::uint64_t n = 0;
  for (const auto& r : runs) n += r.trials;
  return n;
}

namespace {

bool is_null(const std::vector<std::uint64_t>& b) {
  return std::all_of(b.begin(), b.end(), [](std::uint64_t x) { return x == 0; });
}

// Largest power of q not exceeding limit, or nullopt when q^p > limit.
std::optional<std::uint64_t> bounded_power(std::uint64_t q, std::size_t p, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < p; ++i) {
    if (r > limit / q) return std::nullopt;
    r *= q;
  }
  return r;
}

std::optional<std::string> skip_reason(const SymCubic& t, std::uint64_t q) {
  if (!is_prime(q)) return "not prime";
  if (q <= 3) return "characteristic divides 6";
  for (const auto& [key, value] : t.entries()) {
    if (mpz_divisible_ui_p(value.get_num_mpz_t(), q) || mpz_divisible_ui_p(value.get_den_mpz_t(), q)) {
      return "divides entry " + format_scalar(value);
    }
  }
  return std::nullopt;
}

// Projective representatives: first nonzero coordinate equal to one.
std::optional<std::vector<std::uint64_t>> exhaustive_search(const FFTensor& f, std::uint64_t& trials) {
  const std::size_t p = f.dim();
  const std::uint64_t q = f.modulus();
  std::vector<std::uint64_t> v(p), out(p);
  for (std::size_t lead = 0; lead < p; ++lead) {
    std::fill(v.begin(), v.end(), 0);
    v[lead] = 1;
    while (true) {
      ++trials;
      f.polarize_diagonal(v, out);
      if (is_null(out)) return v;
      // base-q counter on the coordinates after the leading one
      bool carry = true;
      for (std::size_t k = p; carry && k > lead + 1;) {
        --k;
        if (++v[k] < q) {
          carry = false;
        } else {
          v[k] = 0;
        }
      }
      if (carry) break;
    }
  }
  return std::nullopt;
}

struct ChunkResult {
  std::uint64_t trials = 0;
  std::optional<std::vector<std::uint64_t>> witness;
};

constexpr std::uint64_t kChunks = 64;

ChunkResult random_chunk(const FFTensor& f, std::uint64_t seed, std::uint64_t chunk, std::uint64_t count) {
  ChunkResult r;
  Rng rng = Rng::derived(seed ^ (f.modulus() * 0x9e3779b97f4a7c15ULL), chunk);
  const std::size_t p = f.dim();
  std::vector<std::uint64_t> v(p), out(p);
  for (std::uint64_t s = 0; s < count; ++s) {
    do {
      for (auto& x : v) x = rng.below(f.modulus());
    } while (is_null(v));
    ++r.trials;
    f.polarize_diagonal(v, out);
    if (is_null(out)) {
      r.witness = v;
      break;
    }
  }
  return r;
}

std::optional<std::vector<std::uint64_t>> random_search(const FFTensor& f, const ProbeConfig& cfg,
                                                        std::uint64_t& trials) {
  std::vector<ChunkResult> results(kChunks);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t c = next++; c < kChunks; c = next++) {
      const std::uint64_t count = cfg.budget / kChunks + (c < cfg.budget % kChunks ? 1 : 0);
      results[c] = random_chunk(f, cfg.seed, c, count);
    }
  };
  unsigned n = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, kChunks);
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  // Merge in chunk order so the outcome does not depend on scheduling.
  std::optional<std::vector<std::uint64_t>> witness;
  for (auto& r : results) {
    trials += r.trials;
    if (!witness && r.witness) witness = std::move(r.witness);
  }
  return witness;
}

}  // namespace

ProbeVerdict smoothness_probe(const SymCubic& t, const ProbeConfig& cfg) {
  ProbeVerdict verdict;
  verdict.cubic_hash = cubic_hash(t);
  for (std::uint64_t q : cfg.primes) {
    ProbePrimeRun run{q, "skipped", 0, ""};
    if (auto why = skip_reason(t, q)) {
      run.note = *why;
      verdict.runs.push_back(run);
      continue;
    }
    const FFTensor f = reduce_mod(t, q);
    std::optional<std::vector<std::uint64_t>> w;
    if (bounded_power(q, t.dim(), cfg.budget)) {
      run.mode = "exhaustive";
      w = exhaustive_search(f, run.trials);
    } else {
      run.mode = "random";
      w = random_search(f, cfg, run.trials);
    }
    verdict.runs.push_back(run);
    if (w) {
      verdict.witness = ProbeWitness{q, std::move(*w)};
      break;
    }
  }
  return verdict;
}

nlohmann::json to_json(const ProbeVerdict& v) {
  nlohmann::json runs = nlohmann::json::array();
  nlohmann::json primes = nlohmann::json::array();
  for (const auto& r : v.runs) {
    primes.push_back(r.q);
    nlohmann::json j{{"q", r.q}, {"mode", r.mode}, {"trials", r.trials}};
    if (!r.note.empty()) j["note"] = r.note;
    runs.push_back(std::move(j));
  }
  nlohmann::json w = nullptr;
  if (v.witness) w = {{"q", v.witness->q}, {"v", v.witness->v}};
  return {{"cubic_hash", v.cubic_hash}, {"primes", std::move(primes)}, {"mode", v.mode()},
          {"witness", std::move(w)},     {"trials", v.trials()},       {"runs", std::move(runs)},
          {"verdict", v.verdict_class()}};
}

BoundaryReport boundary_report(const SymCubic& t, const ProbeConfig& cfg) {
  BoundaryReport r;
  r.probe = smoothness_probe(t, cfg);
  r.p = t.dim();
  r.dim_image = 2 * r.p + 2;
  if (r.probe.found()) {
    r.argument_inapplicable = true;
  } else {
    // phi3 = 0 forces B(phi2, phi2) = 0, hence phi2 = 0; only phi1 remains free.
    r.boundary_parameters = 2 * r.p;
    r.codim2_supported = r.dim_image - *r.boundary_parameters >= 2;
  }
  return r;
}

nlohmann::json to_json(const BoundaryReport& r) {
  nlohmann::json j{{"probe", to_json(r.probe)},
                   {"p", r.p},
                   {"dim_image", r.dim_image},
                   {"codim2_supported", r.codim2_supported},
                   {"argument_inapplicable", r.argument_inapplicable}};
  j["boundary_parameters"] = r.boundary_parameters ? nlohmann::json(*r.boundary_parameters) : nlohmann::json(nullptr);
  if (r.argument_inapplicable) j["note"] = "codimension-2 boundary argument inapplicable: singular point found";
  return j;
}

}  // namespace nilcontact
