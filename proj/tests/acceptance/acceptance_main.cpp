// Prints one PASS/FAIL line per acceptance criterion; exit status is the number of failures (capped at 1).
#include <cstdio>

#include "qrbf/verification.hpp"

int main() {
  qrbf::AcceptanceConfig cfg;
  cfg.gamma = 1.0;
  cfg.quad_order = 80;
  cfg.normalization = qrbf::Normalization::unitary;
  cfg.seed = 20240611;

  auto& t = cfg.tol;
  t.fock_orthogonality = 1e-10;
  t.rbf_orthonormality = 1e-8;
  t.isometry = 1e-10;
  t.reproducing = 1e-7;
  t.kernel_sum = 1e-10;
  t.diagonal = 1e-12;
  t.pointwise_bound = 1e-9;
  t.sequential = 1e-6;
  t.beta = 1e-13;
  t.factorization = 1e-14;
  t.sb_unitarity = 1e-8;
  t.kernel_match = 1e-13;
  t.kernel_series = 1e-9;
  t.slice_independence = 1e-10;
  t.psd = 1e-10;
  t.homomorphism = 1e-13;

  int failures = 0;
  int index = 0;
  for (const auto& r : qrbf::run_acceptance(cfg)) {
    ++index;
    std::printf("%s  %2d %-20s value=%.3e bound=%.1e  (%.2fs)  %s\n", r.pass ? "PASS" : "FAIL", index, r.name.c_str(),
                r.value, r.bound, r.seconds, r.params.c_str());
    for (const auto& p : r.parts) {
      std::printf("        %s %-52s %.3e <= %.1e%s\n", p.pass ? "ok " : "BAD", p.label.c_str(), p.value, p.bound,
                  p.informational ? "  [info]" : "");
    }
    if (!r.pass) ++failures;
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
