// Copyright 2026 The qunc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUNC_SUITE_H
#define QUNC_SUITE_H

#include <cstddef>
#include <string>
#include <vector>

namespace qunc {

/// One named verification check. `margin` is how far the worst case sits
/// inside the tolerance; negative means the check failed.
struct SuiteCheck {
    std::string name;
    std::size_t points = 0;
    double tolerance = 0;
    double worst = 0;
    double margin = 0;
    bool passed = true;
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteCheck> checks;

    bool passed() const;
};

/// Tracks the worst error of a check of the form `error <= tolerance`.
class CheckAccumulator {
   public:
    CheckAccumulator(std::string name, double tolerance);

    /// Records an error (a discrepancy, or minus a gap for inequality checks).
    void record(double error);
    /// Records an inequality `hi >= lo`.
    void record_ge(double hi, double lo) {
        record(lo - hi);
    }
    SuiteCheck finish() const;

   private:
    SuiteCheck check_;
    bool any_ = false;
};

}  // namespace qunc

#endif
