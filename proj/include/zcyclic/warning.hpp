/*
   Copyright 2026 The zcyclic Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ZCYCLIC_WARNING_HPP
#define ZCYCLIC_WARNING_HPP

#include <stdexcept>
#include <string>

namespace zcyclic {

/// Machine-readable diagnostic: a stable code plus a detail string.
struct Warning {
    std::string code;
    std::string detail;

    friend bool operator==(const Warning&, const Warning&) = default;
};

/// Raised when an exhaustive computation would exceed its caller-supplied budget.
class BudgetExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace zcyclic

#endif  // ZCYCLIC_WARNING_HPP
