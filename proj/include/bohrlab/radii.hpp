#pragma once

#include <string>
#include <vector>

namespace bohrlab {

/// The radius-defining equations.
///   RPm        -6r^{p-m} + r^{2(p-m)} + 8r^{2p} + 1                 (lacunary Bohr radius)
///   RStarNm    piecewise system for the functional-type radius
///   RDStarNm   4r^{2N-m} + 4r^{N+1-m} - 4r^{N-m} + r^{m+2} - 2r^{m+1} + r^m
///   RTStarPm   5r^{2p+m} - 2r^{p+m} + r^m + 4r^{2p} - 4r^p        (refined lacunary radius)
///   RogNpm     p (1-r^m)/(1+r^m) - 2r^N/(1-r)                     (Bohr-Rogosinski)
///   RogNp      2r^N - p(1-r)                                      (m -> infinity limit)
enum class RadiusKind { RPm, RStarNm, RDStarNm, RTStarPm, RogNpm, RogNp };

const char* to_string(RadiusKind kind);
RadiusKind radius_kind_from_string(const std::string& s);

/// Integer parameters are capped at 64 so r^{2N} stays representable.
inline constexpr int kMaxRadiusParameter = 64;

struct RadiusEquation {
  RadiusKind kind = RadiusKind::RTStarPm;
  int p = 1;          // RPm, RTStarPm
  int m = 0;          // all kinds except RogNp
  int n = 1;          // RStarNm, RDStarNm, RogNpm, RogNp
  double p_exp = 1.0; // RogNpm, RogNp; in (0, 2]

  static RadiusEquation r_pm(int p, int m) { return {RadiusKind::RPm, p, m, 1, 1.0}; }
  static RadiusEquation r_star(int n, int m) { return {RadiusKind::RStarNm, 1, m, n, 1.0}; }
  static RadiusEquation r_dstar(int n, int m) { return {RadiusKind::RDStarNm, 1, m, n, 1.0}; }
  static RadiusEquation r_tstar(int p, int m) { return {RadiusKind::RTStarPm, p, m, 1, 1.0}; }
  static RadiusEquation rog_npm(int n, double p_exp, int m) {
    return {RadiusKind::RogNpm, 1, m, n, p_exp};
  }
  static RadiusEquation rog_np(int n, double p_exp) { return {RadiusKind::RogNp, 1, 0, n, p_exp}; }

  /// Throws InvalidArgument when the parameters fall outside the hypotheses.
  void validate() const;
  std::string describe() const;
};

double equation_value(const RadiusEquation& eq, double r);
double equation_derivative(const RadiusEquation& eq, double r);

struct RootResult {
  double root = 0.0;
  double residual = 0.0;
  bool double_root = false;
};

/// Grid step for the sign-change scan on (0, 1).
inline constexpr double kRootGridStep = 1e-4;
/// Bisection stops once the bracket is this narrow.
inline constexpr double kRootBracketWidth = 1e-13;
/// Certificate demanded of every returned root.
inline constexpr double kRootResidual = 1e-10;

/// Largest root in (0, 1): uniform scan for sign changes, bisection on each
/// bracket, and a derivative-bisection pass for touching (double) roots.
/// Throws NoRoot when nothing certifies.
RootResult maximal_root(const RadiusEquation& eq);

/// The Bohr-Rogosinski equations are monotone in r, so a single bracket on
/// (0, 1) suffices.
RootResult unique_root(const RadiusEquation& eq);

/// |r*_{N,m} - r**_{N,m}|.
double star_equivalence_check(int n, int m);

/// Every (p, m) or (N, m) combination under the caps, in a fixed order.
std::vector<RadiusEquation> radius_table_equations(int p_max, int m_max, int n_max);

}  // namespace bohrlab
