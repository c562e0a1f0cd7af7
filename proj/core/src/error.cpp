// Copyright 2026 The itemnet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "itemnet/error.hpp"

namespace itemnet {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
    case Errc::MissingColumn: return "MissingColumn";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::ParseError: return "ParseError";
    case Errc::EmptyList: return "EmptyList";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::DegenerateStratum: return "DegenerateStratum";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::Degenerate: return "Degenerate";
    case Errc::EmptySeries: return "EmptySeries";
    case Errc::UncoveredNode: return "UncoveredNode";
    case Errc::UnsupportedAlgorithm: return "UnsupportedAlgorithm";
    case Errc::DisconnectedInput: return "DisconnectedInput";
    case Errc::EmptySelection: return "EmptySelection";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::MissingCovariate: return "MissingCovariate";
    case Errc::SingularInformation: return "SingularInformation";
    case Errc::Separation: return "Separation";
    case Errc::ConfigError: return "ConfigError";
    case Errc::MissingPrerequisite: return "MissingPrerequisite";
    case Errc::IoError: return "IoError";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string &message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

} // namespace itemnet
