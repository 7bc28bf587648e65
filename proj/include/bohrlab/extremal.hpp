#pragma once

#include <optional>
#include <vector>

namespace bohrlab::extremal {

// Closed forms of the refined sums on the Mobius-built extremal families. They
// serve as the second route against the series evaluators.

/// A on lambda^m (lambda^p - a)/(1 - a lambda^p): r^m (a + (1-a^2) r^p/(1-r^p)).
double a_family_value(double a, int p, int m, double r);

/// D_{m+1,m} on lambda^m (lambda - a)/(1 - a lambda): r^m (a + (1-a^2) r/(1-r)).
double d_family_value(double a, int m, double r);

/// Psi_{p,N,m}(r) for f_a = (a + lambda)/(1 + a lambda) with w = lambda^m, so that
/// the Bohr-Rogosinski sum equals 1 + (1-a) Psi. m = nullopt is the w = 0 limit.
double psi_rogosinski(double a, double p_exp, int n, std::optional<int> m, double r);

/// lim_{a -> 1} Psi_{p,N,m}(r) = -p (1-r^m)/(1+r^m) + 2 r^N/(1-r); m = nullopt gives -p + 2r^N/(1-r).
double psi_rogosinski_limit(double p_exp, int n, std::optional<int> m, double r);

/// Psi*(r) with the improved sum on f_a equal to 1 - (1-a) Psi*.
double psi_improved(double a, const std::vector<double>& d, double r);

/// lim_{a -> 1} Psi*(r) = (1 - 3r)/(1 - r).
double psi_improved_limit(double r);

/// Choice of a that makes the A family touch 1 exactly at r0 (1 <= m <= p).
double a_family_optimal_parameter(int p, double r0);

/// Same for the D family at r0 = r**_{m+1,m} (m >= 1).
double d_family_optimal_parameter(double r0);

}  // namespace bohrlab::extremal
