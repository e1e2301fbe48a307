#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nilcontact/roots.hpp"
#include "nilcontact/scalar.hpp"
#include "nilcontact/structure_table.hpp"

namespace nilcontact {

// Simple Lie algebra in a Chevalley basis: h_1..h_r (simple coroots), then e_beta in
// the root order of the RootSystem.
//
// Sign convention: for each non-simple positive root xi, take the smallest i with
// xi - alpha_i a root; the extraspecial pair (alpha_i, xi - alpha_i) gets
// N = +(r + 1), r the largest integer with xi - alpha_i - r alpha_i a root. All other
// constants follow, with N_{-a,-b} = -N_{a,b} and [e_a, e_-a] = h_a.
class ChevalleyAlgebra {
public:
  explicit ChevalleyAlgebra(RootSystem rs);

  const RootSystem& roots() const { return rs_; }
  std::size_t dim() const { return table_.dim(); }
  std::size_t rank() const { return static_cast<std::size_t>(rs_.rank()); }
  std::size_t root_basis_index(const Root& r) const;
  std::size_t root_basis_index(std::size_t root_index) const { return rank() + root_index; }
  bool is_cartan(std::size_t basis_index) const { return basis_index < rank(); }
  // Root of a root-space basis vector.
  const Root& root_of(std::size_t basis_index) const { return rs_.roots()[basis_index - rank()]; }
  std::string label(std::size_t basis_index) const;

  const StructureTable<std::int64_t>& structure() const { return table_; }
  // The same constants over Q, for brackets of rational combinations.
  const StructureTable<Scalar>& rational_structure() const { return qtable_; }

  // N_{a,b} with [e_a, e_b] = N_{a,b} e_{a+b}; zero when a + b is not a root.
  std::int64_t n_const(const Root& a, const Root& b) const;

private:
  RootSystem rs_;
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> npos_;  // positive pairs
  StructureTable<std::int64_t> table_;
  StructureTable<Scalar> qtable_;
};

// Coefficients of the coroot of `root` on h_1..h_r.
struct CorootElement {
  Root root;
  Vec coefficients;
  // beta(H) = sum_i c_i <beta, alpha_i^vee>
  Scalar eval(const RootSystem& rs, const Root& beta) const;
};

CorootElement coroot_element(const ChevalleyAlgebra& alg, const Root& root);

// Partition of the basis by ad(H_psi)-eigenvalue; pieces[k] holds eigenvalue k - 2.
struct FiveStepGrading {
  std::vector<std::vector<std::size_t>> pieces;
  std::vector<std::size_t> dims() const;
};

FiveStepGrading five_step_grading(const ChevalleyAlgebra& alg);

}  // namespace nilcontact
