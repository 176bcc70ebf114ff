#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cascade {

enum class Variant { SinglePoint3D, Cantor3D, Axisymmetric };

std::string variant_name(Variant v);
std::optional<Variant> variant_from_name(const std::string& name);

/// Every scalar parameter of the constructions plus the derived partial sums.
///
/// lambda  amplification factor per level (> 1)
/// sigma   time contraction ratio per level (in (0,1)); Cantor variant ties
///         it to the spatial subdivision: sigma = 1/k^2 exactly
/// k, m    spatial subdivision count and number of selected cells (Cantor)
/// q       spatial integrability exponent (> 1)
/// p       forcing integrability exponent (> 1)
/// beta, epsilon  fluctuation regularity exponents (beta > epsilon > 0)
/// M       axial half-width of the planar base profile
/// nu      viscosity; fixed to 1, kept only so configs can state it
struct ScalingParams {
  double lambda = 2.0;
  double sigma = 0.1;
  int k = 5;
  int m = 8;
  double q = 7.0;
  double p = 1.5;
  double beta = 0.1;
  double epsilon = 0.02;
  double M = 1.0;
  double nu = 1.0;

  /// Throws ParameterError on non-finite or out-of-range values.  The Cantor
  /// coupling sigma == 1/k^2 is enforced only when `variant` is Cantor3D.
  void validate(Variant variant) const;

  /// sigma_N = sum_{j=1..N} sigma^j (direct summation; 0 for N = 0).
  double sigma_partial(int N) const;
  /// T = sigma/(1-sigma), the total blow-up time.
  double total_time() const;
  /// rho_N = sum_{j=1..N} sigma^{j/2}.
  double rho_partial(int N) const;
  /// rho_inf = sqrt(sigma)/(1-sqrt(sigma)).
  double rho_infinity() const;
};

/// Time partition sigma_0 = 0 < sigma_1 < ... -> T with I_N = [sigma_{N-1},
/// sigma_N) of length sigma^N.  Values are cached by direct summation so that
/// sigma_partial(N) + sigma^{N+1} == sigma_partial(N+1) holds exactly.
class TimePartition {
 public:
  TimePartition(double sigma, int max_level);

  double sigma_partial(int N) const;
  double total_time() const { return total_; }
  double interval_length(int N) const;  // |I_N| = sigma^N
  double sigma_pow(int N) const;
  int max_level() const { return static_cast<int>(partials_.size()) - 1; }

 private:
  double sigma_;
  double total_;
  std::vector<double> partials_;  // partials_[N] = sigma_N
  std::vector<double> powers_;    // powers_[N] = sigma^N
};

/// Radial partition rho_N for the axisymmetric construction.
class RadialPartition {
 public:
  RadialPartition(double sigma, int max_level);

  double rho_partial(int N) const;
  double rho_infinity() const { return rho_inf_; }
  double sqrt_sigma_pow(int N) const;

 private:
  double rho_inf_;
  std::vector<double> partials_;
  std::vector<double> powers_;  // (sqrt sigma)^N
};

/// One evaluated inequality: lhs OP threshold, with OP strict (<, >) or
/// non-strict (<=) following the exact symbol the inequality is stated with.
struct RegimeRecord {
  std::string name;
  std::string expression;
  double lhs = 0.0;
  double threshold = 0.0;
  bool strict = true;       // true: lhs < threshold; false: lhs <= threshold
  bool greater = false;     // true: lhs > threshold required instead
  bool satisfied = false;
  double margin = 0.0;      // threshold - lhs (or lhs - threshold if greater)
};

struct RegimeReport {
  std::vector<RegimeRecord> records;

  const RegimeRecord* find(const std::string& name) const;
  bool all_satisfied() const;
  /// Subset relevant to a construction variant; used for go/no-go gating.
  bool required_satisfied(Variant variant) const;
  static std::vector<std::string> required_names(Variant variant);

  std::string to_json() const;
};

/// Evaluates the complete inequality table:
///   energy_3d          lambda * sigma^{3/4}              < 1
///   forcing_lp_3d      lambda^p * sigma^{5/2-p}          < 1
///   fluctuation_g      lambda * sigma^{1/4-(beta-eps)}  <= 1
///   weak_solution      lambda * sigma                    < 1
///   linf_lq_3d         lambda^q * sigma^{3/2}            < 1
///   axisym_lq          lambda^q * sigma                  < 1
///   axisym_sigma       sigma                             < 1/4
///   forcing_lp_axisym  lambda^p * sigma^{2-p}            < 1
///   p_vs_q             p                                <= 2q/(1+q)
///   cantor_blowup      lambda                            > m
/// plus the dimension bound log m / log k < 3/q.
RegimeReport check_regime(const ScalingParams& params);

/// Similarity dimension log m / log k of the Cantor set C_{k,m}.
double hausdorff_dimension(int k, int m);

/// Deterministic search (increasing k, then m, k <= 64) for a Cantor
/// parameter set whose dimension is within 0.05 of target_dim and which
/// passes the Cantor-variant regime for the requested q.  lambda is placed at
/// the geometric mean of its feasible interval (m, k^{3/q}).
/// Throws InfeasibleError when target_dim >= 3/q or no admissible pair
/// exists.
ScalingParams suggest_params(double target_dim, double q);

}  // namespace cascade
