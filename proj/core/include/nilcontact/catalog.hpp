#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nilcontact/extraction.hpp"
#include "nilcontact/moment.hpp"
#include "nilcontact/sym_cubic.hpp"

namespace nilcontact {

struct CatalogEntry {
  std::string name;
  std::size_t p;
  std::string description;
  std::function<SymCubic()> build;
  bool reference_only = false;  // smooth reference cubic, not a Jordan norm
};

// x3, xq<p> for 2 <= p <= 27 is generated on demand by find_catalog_entry.
const std::vector<CatalogEntry>& catalog_list();
// Throws InputError for unknown names.
CatalogEntry find_catalog_entry(const std::string& name);

// Builders, all normalised so the first nonzero entry is 1.
SymCubic cubic_x3();
SymCubic cubic_xq(std::size_t p);  // x_1 (x_2^2 + ... + x_p^2)
SymCubic cubic_xyz();
SymCubic cubic_fermat(std::size_t p);
SymCubic cubic_det_sym3();  // coordinates a, b, c (diagonal), d = (12), e = (13), f = (23)
SymCubic cubic_det3();      // coordinates m_11, m_12, ..., m_33
SymCubic cubic_pfaff6();    // coordinates s_ij, i < j, lexicographic
SymCubic cubic_j3o();       // l_1, l_2, l_3, then a_1, a_2, a_3 in R^8

// Coordinates of the identity matrix for det3, and of the standard symplectic form
// e_12 + e_34 + e_56 for pfaff6.
Vec det3_identity();
Vec pfaff6_standard();

// Octonion product of basis units: e_a e_b = sign * e_index, with e_0 = 1.
struct OctonionProduct {
  int sign;
  int index;
};
OctonionProduct octonion_mul(int a, int b);

struct Signature {
  std::size_t p = 0;
  std::size_t b_rank = 0;
  std::string probe;  // witness-found | none-found
  std::string probe_mode;
  std::size_t nonzero_entries = 0;
  std::string eval_hash;
};

Signature signature(const SymCubic& t, const ProbeConfig& cfg);
nlohmann::json to_json(const Signature& s);

struct ComparisonReport {
  std::string entry;
  std::string algebra;
  Signature catalog;
  Signature extracted;
  std::vector<std::string> mismatches;
  bool consistent() const { return mismatches.empty(); }
};

ComparisonReport compare_signatures(const std::string& entry, const Signature& catalog, const std::string& algebra,
                                    const Signature& extracted);
ComparisonReport compare_to_extraction(const CatalogEntry& entry, const ChevalleyAlgebra& alg, const ProbeConfig& cfg);
nlohmann::json to_json(const ComparisonReport& r);

}  // namespace nilcontact
