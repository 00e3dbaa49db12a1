/*
   Copyright 2026 The mdsdual Authors

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

#ifndef MDSDUAL_ERROR_HPP
#define MDSDUAL_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace mdsdual {

enum class ErrorCode {
    // field
    NonPrime,
    EvenCharacteristic,
    DegreeZero,
    FieldTooLarge,
    NotPrimePower,
    DivisionByZero,
    ZeroToNegativePower,
    NotASquare,
    ZeroElement,
    NotDividing,
    NotASubfield,
    // grs
    IndexOutOfRange,
    DimensionMismatch,
    OddLength,
    DuplicatePoint,
    SquareConditionViolated,
    // constructions
    NotEnoughCosets,
    ParityInfeasible,
    HypothesisViolated,
    TooLargeToMaterialize,
    UnsupportedTheorem,
    // verify
    TooLarge,
    // census
    EvenQ,
    BudgetExceeded,
    SpotCheckFailed,
    // io
    MalformedInput,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `detail()` carries the offending
/// clause or value without the code prefix, so callers can show it verbatim.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string detail);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }
    [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

}  // namespace mdsdual

#endif  // MDSDUAL_ERROR_HPP
