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

#include "mdsdual/error.hpp"

namespace mdsdual {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroToNegativePower: return "ZeroToNegativePower";
    case ErrorCode::NotASquare: return "NotASquare";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NotDividing: return "NotDividing";
    case ErrorCode::NotASubfield: return "NotASubfield";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::OddLength: return "OddLength";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::SquareConditionViolated: return "SquareConditionViolated";
    case ErrorCode::NotEnoughCosets: return "NotEnoughCosets";
    case ErrorCode::ParityInfeasible: return "ParityInfeasible";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::TooLargeToMaterialize: return "TooLargeToMaterialize";
    case ErrorCode::UnsupportedTheorem: return "UnsupportedTheorem";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::EvenQ: return "EvenQ";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SpotCheckFailed: return "SpotCheckFailed";
    case ErrorCode::MalformedInput: return "MalformedInput";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, std::string detail)
    : std::runtime_error(std::string(to_string(code)) + (detail.empty() ? "" : ": " + detail)),
      code_(code),
      detail_(std::move(detail))
{
}

}  // namespace mdsdual
