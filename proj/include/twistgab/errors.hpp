/*
   Copyright 2026 The twistgab Authors

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

#ifndef TWISTGAB_ERRORS_HPP
#define TWISTGAB_ERRORS_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace twistgab {

/*
 * Error taxonomy:
 *   std::invalid_argument  - malformed input or violated precondition
 *   std::domain_error      - arithmetic without a result (inverse of zero)
 *   BudgetExceeded         - a brute-force enumeration would exceed its cap
 *   ConsistencyError       - two independent routes disagree, or a checked
 *                            mathematical identity failed
 */

class BudgetExceeded : public std::runtime_error {
   public:
    BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t cap)
        : std::runtime_error(what + " is too large for brute force (needs " + std::to_string(required) +
                             ", budget " + std::to_string(cap) + ")"),
          required_(required),
          cap_(cap) {}

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t cap() const noexcept { return cap_; }

   private:
    std::uint64_t required_;
    std::uint64_t cap_;
};

class ConsistencyError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Enumeration caps shared by every brute-force routine.
struct Budget {
    std::uint64_t subspaces = std::uint64_t{1} << 20;
    std::uint64_t codewords = std::uint64_t{1} << 24;
    std::uint64_t ambient = std::uint64_t{1} << 24;
    unsigned workers = 1;
};

namespace detail {

inline constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) noexcept {
    if (a == 0 || b == 0) return 0;
    if (a > saturated / b) return saturated;
    return a * b;
}

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) noexcept {
    return (a > saturated - b) ? saturated : a + b;
}

inline std::uint64_t sat_pow(std::uint64_t base, unsigned exp) noexcept {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) r = sat_mul(r, base);
    return r;
}

inline void check_budget(const std::string& what, std::uint64_t required, std::uint64_t cap) {
    if (required > cap) throw BudgetExceeded(what, required, cap);
}

}  // namespace detail

}  // namespace twistgab

#endif  // TWISTGAB_ERRORS_HPP
