#pragma once

#include <string>
#include <vector>

#include "normcat/algebra.hpp"
#include "normcat/finset.hpp"

// Named small structures used by tests, the acceptance run and the CLI.

namespace normcat {

struct Named {
  std::string name;
  Alg object;
};

// Z_n with labels 0..n-1.
Alg cyclic_group(std::size_t n, bool abelian = true);
Alg direct_product(const Alg& a, const Alg& b);
// Elements a^i x^j (i < n, j < m) with a^n = e, x^m = a^t, x a x⁻¹ = a^r.
// Dihedral: (n, 2, 0, n-1); dicyclic: (n, 2, n/2, n-1).
Alg metacyclic_group(std::size_t n, std::size_t m, std::size_t t, std::size_t r, const std::string& a = "a",
                     const std::string& x = "x");
Alg dihedral_group(std::size_t n);
Alg quaternion_group();
// Closure of permutations of {1..degree} (one-line images, 1-based), labelled
// in cycle notation with "e" for the identity.
Alg permutation_group(std::size_t degree, const std::vector<std::vector<std::size_t>>& generators);
Alg symmetric3();
Alg alternating4();

// All 24 groups of order ≤ 12 up to isomorphism.
std::vector<Named> groups_up_to_12();
// The 11 abelian groups of order ≤ 8, as Ab objects.
std::vector<Named> abelian_groups_up_to_8();
// Same, as Grp objects.
std::vector<Named> groups_up_to_8();

// Rings.
Alg zero_ring();
Alg zn_ring(std::size_t n);
// Z_n[x]/(g) for monic g given by coefficients c_0..c_{d-1} of x^d + ... .
Alg poly_quotient_ring(std::size_t n, const std::vector<std::size_t>& lower_coeffs);
Alg f4();
Alg f8();
// F2[x]/(x²).
Alg dual_numbers_f2();
Alg product_ring(const Alg& a, const Alg& b);
// The 7 commutative unital rings of order ≤ 4.
std::vector<Named> rings_up_to_4();
// x ↦ x^p with p the (prime) characteristic.
Arrow<Alg> frobenius(const Alg& r);
// The unique unital map Z_n → R; throws if char R does not divide n.
Arrow<Alg> ring_from_zn(const Alg& zn, const Alg& r);

// Commutative monoids of order ≤ max_order, one per isomorphism class, unit
// labelled "e".
std::vector<Named> commutative_monoids(std::size_t max_order);
// ({0,..,n-1}, min(a+b, n-1)).
Alg truncated_monoid(std::size_t n);
// A commutative monoid given by a group's table.
Alg monoid_of_group(const Alg& g);

// Topologies on {0..n-1} (n ≤ max_points) up to homeomorphism, from preorders
// with U_x = { y | x ≤ y }.
std::vector<TopObj> topologies_up_to(std::size_t max_points);

}  // namespace normcat
