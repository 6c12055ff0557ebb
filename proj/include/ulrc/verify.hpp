/*
 * Copyright 2026 The ulrc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ULRC_VERIFY_HPP
#define ULRC_VERIFY_HPP

#include <string>

#include "ulrc/oracle.hpp"

namespace ulrc {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct VerifyOptions {
    bool quick = false;  // skip the exponential searches
    std::uint64_t seed = 1;
    std::size_t random_subsets = 500;
    OracleCaps caps;
};

/// Runs the full invariant suite against a constructed (or loaded) code:
/// structural group ranks, the two encoding paths, the rank identity on
/// random symbol sets, greedy-vs-exhaustive worst patterns, per-symbol
/// locality, profile equality, distance optimality, and the bound chain.
/// Exceptions inside a check count as that check failing.
std::vector<CheckResult> verify_code(const LrcCode& code, const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace ulrc

#endif
