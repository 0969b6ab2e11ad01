// core/include/gpr/verify.hpp

// Copyright 2026  The gabor-phase-retrieval authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

// Self-contained property checks behind the `verify` subcommand.  Each check
// recomputes one identity of the library against an independent oracle and
// is named so a regression points at the module that broke.

#ifndef GPR_VERIFY_HPP_
#define GPR_VERIFY_HPP_

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "gpr/ansatz.hpp"

namespace gpr {

/// Injection points for the checks.  Production runs leave them empty; the
/// test suite substitutes a perturbed implementation to prove the checks can
/// fail (and fail in the right place).
struct VerifyHooks {
  /// Replaces eval_operator inside the "evaluation-identity" check.
  std::function<std::complex<double>(const EntireExtension&, Vec2, Vec2)>
      eval_operator;
};

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;    // worst deviation, or the thrown message
  double seconds = 0.0;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Runs every check.  Never throws; a check that throws is reported failed
/// with the exception message as detail.
VerifyReport run_verification(const VerifyHooks& hooks = {});

}  // namespace gpr

#endif  // GPR_VERIFY_HPP_
