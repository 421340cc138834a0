#pragma once

// Built-in Sullivan models and morphisms.

#include "aq/cdga.hpp"

#include <string>

namespace aq::cdga::models {

/// M(S^n): (Λ(e_n), 0) for odd n, (Λ(e_n, e_{2n-1}), d e_{2n-1} = e_n^2) for even n.
/// Generators are named "e<degree>".
Presentation sphere(int n);

/// Λ(x_2, xp_{2n+1}), d xp = x^{n+1}.
Presentation cpn(int n, const std::string& x = "x", const std::string& xp = "xp");

/// Q[g] with |g| = degree (must be even).
Presentation polynomial_algebra(const std::string& gen, int degree, const std::string& name = "");

/// Q[z_2], the model of CP^∞.
Presentation cp_infinity(const std::string& gen = "z");

/// Q[g]/(g^{m+1}) with |g| = degree (even), zero differential.
Presentation truncated_polynomial(const std::string& gen, int degree, int m, const std::string& name = "");

/// H*(CP^m; Q) = Q[y_2]/(y^{m+1}).
Presentation cpm_cohomology(int m, const std::string& gen = "y");

/// A ⊗ B; generator names must be disjoint. Generators keep A's then B's declaration order.
Presentation tensor(const Presentation& a, const Presentation& b, const std::string& name);

Morphism identity(const Presentation& a, const std::string& name = "id");
/// Every generator goes to zero.
Morphism constant_map(const Presentation& source, const Presentation& target, const std::string& name = "c");

/// The parameterised family Q[z]⊗Λ(x, xp) -> Q[w]⊗Q[y]/(y^{m+1}):
/// z ↦ q1 w, x ↦ q2 w + q3 y, xp ↦ 0. Requires n >= 1 and 0 <= m < n.
/// Source is named "Y", target "B", the morphism "f".
Morphism cp_map(int n, int m, const Rational& q1, const Rational& q2, const Rational& q3);

}  // namespace aq::cdga::models
