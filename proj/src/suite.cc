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

#include "qunc/suite.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qunc {

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck &c) {
        return c.passed;
    });
}

CheckAccumulator::CheckAccumulator(std::string name, double tolerance) {
    check_.name = std::move(name);
    check_.tolerance = tolerance;
    check_.worst = -std::numeric_limits<double>::infinity();
}

void CheckAccumulator::record(double error) {
    check_.points++;
    if (std::isnan(error)) {
        error = std::numeric_limits<double>::infinity();
    }
    check_.worst = any_ ? std::max(check_.worst, error) : error;
    any_ = true;
}

SuiteCheck CheckAccumulator::finish() const {
    SuiteCheck out = check_;
    if (!any_) {
        out.worst = 0;
    }
    out.margin = out.tolerance - out.worst;
    out.passed = any_ && out.margin >= 0;
    return out;
}

}  // namespace qunc
