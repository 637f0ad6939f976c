#pragma once

namespace yamabe::variational {

// Y(S^n) = n (n-1) Vol(S^n)^{2/n}
double sphere_yamabe_constant(int n);

// Global and local Yamabe constants of a model space.
struct Thresholds {
  double Y = 0.0;
  double Y_local = 0.0;
  int n = 0;

  static Thresholds sphere(int n);

  // Compactified 4-dimensional ALE space with a single orbifold point of
  // group order |Gamma|: Y_local = Y(S^4) / sqrt(|Gamma|). The global constant
  // equals the local one, which is the Eguchi-Hanson case (|Gamma| = 2).
  static Thresholds orbifold_quotient(int group_order, int n = 4);

  static Thresholds eguchi_hanson() { return orbifold_quotient(2, 4); }
};

}  // namespace yamabe::variational
