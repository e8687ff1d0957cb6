/*
 * Copyright 2026 The sumlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SUMLAB_ERROR_H_
#define SUMLAB_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace sumlab {

enum class ErrorCode {
  kNotPrime,
  kTooSmall,
  kTooFewParties,
  kDimensionMismatch,
  kUnknownParty,
  kInvalidRing,
  kInvalidCoalition,
  kInconsistentView,
  kTooLargeToEnumerate,
  kInvalidArgument,
  kParseError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported as sumlab::Error. The code is stable and
// meant for dispatch; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sumlab

#endif  // SUMLAB_ERROR_H_
