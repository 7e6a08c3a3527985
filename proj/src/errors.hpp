// Copyright 2026 The emuq developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace emuq {

/// Domain error taxonomy. Mirrored one-to-one by the C API status codes.
enum class Errc {
    ZeroVector = 1,
    NotNormalized,
    ParseError,
    LengthMismatch,
    CapacityExceeded,
    NotPowerOfTwo,
    NotAnEigenvector,
    NotUnitary,
    ZeroSample,
    ExhaustedTrials,
    IndexOutOfRange,
    InsufficientData,
    InvalidArgument,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

inline const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::ZeroVector:
        return "ZeroVector";
    case Errc::NotNormalized:
        return "NotNormalized";
    case Errc::ParseError:
        return "ParseError";
    case Errc::LengthMismatch:
        return "LengthMismatch";
    case Errc::CapacityExceeded:
        return "CapacityExceeded";
    case Errc::NotPowerOfTwo:
        return "NotPowerOfTwo";
    case Errc::NotAnEigenvector:
        return "NotAnEigenvector";
    case Errc::NotUnitary:
        return "NotUnitary";
    case Errc::ZeroSample:
        return "ZeroSample";
    case Errc::ExhaustedTrials:
        return "ExhaustedTrials";
    case Errc::IndexOutOfRange:
        return "IndexOutOfRange";
    case Errc::InsufficientData:
        return "InsufficientData";
    case Errc::InvalidArgument:
        return "InvalidArgument";
    }
    return "UnknownError";
}

} // namespace emuq
