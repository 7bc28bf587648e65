#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bohrlab/radii.hpp"
#include "bohrlab/series.hpp"

namespace bohrlab {

/// Which refined Bohr-type sum to evaluate.
///   APm        lacunary refined Bohr sum (also the B / C variants via banach slices)
///   DNm        refined sum for P_m + sum_{s>=N} P_s (also E / F)
///   GMpN       Bohr-Rogosinski sum with a Schwarz function of order m
///   HpN        its m -> infinity limit, |f(0)|^p in front
///   IM         improved Bohr sum with G_M(S*)
///   LemmaTail  the left side of the refined tail estimate
enum class FunctionalTag { APm, DNm, GMpN, HpN, IM, LemmaTail };

const char* to_string(FunctionalTag tag);
FunctionalTag functional_tag_from_string(const std::string& s);

struct FunctionalKind {
  FunctionalTag tag = FunctionalTag::APm;
  int p = 1;
  int m = 0;
  int n = 1;
  double p_exp = 1.0;
  std::vector<double> d;

  static FunctionalKind a_pm(int p, int m) { return {FunctionalTag::APm, p, m, 1, 1.0, {}}; }
  static FunctionalKind d_nm(int n, int m) { return {FunctionalTag::DNm, 1, m, n, 1.0, {}}; }
  static FunctionalKind g_mpn(int m, double p_exp, int n) {
    return {FunctionalTag::GMpN, 1, m, n, p_exp, {}};
  }
  static FunctionalKind h_pn(double p_exp, int n) {
    return {FunctionalTag::HpN, 1, 0, n, p_exp, {}};
  }
  static FunctionalKind i_m(std::vector<double> d) {
    return {FunctionalTag::IM, 1, 0, 1, 1.0, std::move(d)};
  }
  static FunctionalKind lemma_tail(int n) { return {FunctionalTag::LemmaTail, 1, 0, n, 1.0, {}}; }

  void validate() const;
  std::string describe() const;
};

/// Radius at which the corresponding theorem guarantees the sum is at most one.
double theorem_radius(const FunctionalKind& kind);

struct Provenance {
  std::string kind;
  std::string function;
  double r = 0.0;
};

struct EvaluationReport {
  double value = 0.0;
  /// Certified bound on everything the truncation dropped.
  double tail_error = 0.0;
  /// value + tail_error - 1: nonpositive certifies the inequality. For the
  /// tail-estimate kind the right-hand side replaces 1.
  double margin = 0.0;
  bool certified = true;
  Provenance inputs;
};

/// Radius contract shared by every evaluator: 0 <= r < 0.995.
void require_radius(double r);

/// Lacunary refined sum at |z| = r with |P_{sp+m}(z)| = |g_s| r^{sp+m}.
EvaluationReport eval_A(const LacunarySeries& f, double r);

/// Same sum read off a full-degree coefficient sequence (slice coefficients or
/// term norms) that must be supported on {sp + m}.
EvaluationReport eval_A_terms(const CoefficientSeries& terms, int p, int m, double r);

/// Index convention for the squared sum of eval_D. The norm-type variant prints
/// its squared sum over the (s+m)-indexed terms for s >= N; ShiftedByM
/// reproduces that literally, Degree uses the degrees s >= N that the proof bounds.
enum class SquaredIndex { Degree, ShiftedByM };

/// |P_m| + sum_{s>=N} |P_s| + (1/(r^m + |P_m|) + r^{1-m}/(1-r)) sum |P_s|^2,
/// coefficients supported on {m} u {s >= N}.
EvaluationReport eval_D(const CoefficientSeries& terms, int m, int n, double r,
                        SquaredIndex index = SquaredIndex::Degree);

/// Bohr-Rogosinski sum |f(w(r))|^p + tail sums. `w` is the slice of a Schwarz
/// mapping with a zero of order m.
EvaluationReport eval_G(const CoefficientSeries& f, int m, double p_exp, int n, double r,
                        const CoefficientSeries& w);

/// eval_G with w identically zero.
EvaluationReport eval_H(const CoefficientSeries& f, double p_exp, int n, double r);

struct BoundedValue {
  double value = 0.0;
  double tail_error = 0.0;
};

/// sum_{s>=1} s |c_s|^2 r^{2s}
BoundedValue s_star(const CoefficientSeries& f, double r);

/// max_{a in [0,1]} a (1+a)^2 (1-a^2)^{2s-2}; s = 1 gives the endpoint value 4.
double c_constant(int s);

struct ConstraintResult {
  bool ok = true;
  double lhs = 0.0;
  /// lhs - 1 when violated, else 0.
  double excess = 0.0;
};

/// sum_i 2(2i-1) c_i d_i (3/8)^{2i} <= 1 with c_1 = 4. Equality within 1e-12 passes.
ConstraintResult constraint_check(const std::vector<double>& d);

/// Refined Bohr sum plus G_M(S*) with G_M(t) = sum d_i t^i.
EvaluationReport eval_I(const CoefficientSeries& f, const std::vector<double>& d, double r);

struct LemmaSlack {
  /// RHS - LHS of the refined tail estimate.
  double slack = 0.0;
  double tail_error = 0.0;
};

LemmaSlack lemma_tail_bound_check(const CoefficientSeries& f, int n, double r);

/// Evaluates `kind` on a plain slice series. APm reads the series as the full
/// slice (support {sp+m}); DNm likewise with support {m} u {s>=N}; GMpN uses
/// w = lambda^m.
EvaluationReport evaluate(const FunctionalKind& kind, const CoefficientSeries& f, double r);

}  // namespace bohrlab
