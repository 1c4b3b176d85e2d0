#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qrbf/kernels.hpp"

namespace qrbf {

/// One measured quantity inside a check; pass iff value ≤ bound.
struct CheckPart {
  std::string label;
  double value = 0.0;
  double bound = 0.0;
  bool pass = false;
  // Reported but not required for the check to pass.
  bool informational = false;
};

struct CheckResult {
  std::string name;
  std::string anchor;  // the identity being reproduced, in words
  std::string params;
  double value = 0.0;  // worst part, by value / bound
  double bound = 0.0;
  bool pass = false;
  double seconds = 0.0;
  std::vector<CheckPart> parts;
};

struct AcceptanceTolerances {
  double fock_orthogonality = 1e-10;
  double rbf_orthonormality = 1e-8;
  double isometry = 1e-10;
  double reproducing = 1e-7;
  double kernel_sum = 1e-10;
  double diagonal = 1e-12;
  double pointwise_bound = 1e-9;
  double sequential = 1e-6;
  double beta = 1e-13;
  double factorization = 1e-14;
  double sb_unitarity = 1e-8;
  double kernel_match = 1e-13;
  double kernel_series = 1e-9;
  double slice_independence = 1e-10;
  double psd = 1e-10;
  double homomorphism = 1e-13;
};

/// Names accepted by set_tolerance, in declaration order.
std::vector<std::string_view> tolerance_names();
/// Throws std::invalid_argument for unknown names or non-positive values.
void set_tolerance(AcceptanceTolerances& tol, std::string_view name, double value);

struct AcceptanceConfig {
  double gamma = 1.0;
  int quad_order = 80;
  Normalization normalization = Normalization::unitary;
  std::uint64_t seed = 20240611;
  AcceptanceTolerances tol;
};

CheckResult check_fock_orthogonality(const AcceptanceConfig& cfg);
CheckResult check_rbf_orthonormality(const AcceptanceConfig& cfg);
CheckResult check_isometry(const AcceptanceConfig& cfg);
CheckResult check_reproducing(const AcceptanceConfig& cfg);
CheckResult check_kernel_sum(const AcceptanceConfig& cfg);
CheckResult check_diagonal_and_bound(const AcceptanceConfig& cfg);
CheckResult check_sequential(const AcceptanceConfig& cfg);
CheckResult check_factorizations(const AcceptanceConfig& cfg);
CheckResult check_sb_unitarity(const AcceptanceConfig& cfg);
CheckResult check_kernel_match(const AcceptanceConfig& cfg);
CheckResult check_slice_independence(const AcceptanceConfig& cfg);
CheckResult check_psd(const AcceptanceConfig& cfg);

/// All twelve checks in order.
std::vector<CheckResult> run_acceptance(const AcceptanceConfig& cfg);

/// Report entry without timing, so reports are reproducible byte for byte.
nlohmann::json to_json(const CheckResult& r);

}  // namespace qrbf
