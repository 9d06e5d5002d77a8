// The invariant battery: every structural identity the library is supposed
// to satisfy, run against a list of parameter tuples.  Violations come back
// as records, not exceptions, so a run can report everything at once.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mholo/oracle.hpp"

namespace mholo {

struct Violation {
  std::string check;   // short identifier of the failed invariant
  std::string where;   // parameter tuple or input description
  std::string detail;  // what was expected vs observed
};

struct VerifyOptions {
  std::vector<GroupParams> params;  // empty = default_verify_params()
  bool with_oracle = true;
  bool open_regime = false;  // record open-regime counts in the result
  bool inject_fault = false;  // negative control: forces one violation
  Budget budget;
  uint64_t seed = 0x5eed;
};

struct VerifyResult {
  std::vector<Violation> violations;
  std::vector<CountReport> open_counts;  // populated when open_regime is set
};

// The tiny default suite: p = 3, m + n <= 5 (all seven parameter tuples).
std::vector<GroupParams> default_verify_params();

VerifyResult run_verification(const VerifyOptions& options);

// Individual batteries, appending violations.
void verify_arith(std::vector<Violation>& out);
void verify_group(const GroupParams& P, const Budget& budget,
                  std::vector<Violation>& out, uint64_t seed);
void verify_aut(const GammaContext& ctx, const Budget& budget,
                std::vector<Violation>& out, uint64_t seed);
void verify_gamma(const GammaContext& ctx, const Budget& budget,
                  std::vector<Violation>& out);
void verify_count(const GammaContext& ctx, std::vector<Violation>& out);
void verify_holomorph(const GammaContext& ctx, const Budget& budget,
                      std::vector<Violation>& out);
void verify_oracle(const GammaContext& ctx, const Budget& budget,
                   std::vector<Violation>& out, uint64_t seed);

}  // namespace mholo
