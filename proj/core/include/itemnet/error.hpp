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

#ifndef ITEMNET_ERROR_HPP_
#define ITEMNET_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace itemnet {

/// Machine-readable error categories shared by every module.
enum class Errc {
    MissingColumn,
    DuplicateId,
    ParseError,
    EmptyList,
    OutOfRange,
    DegenerateStratum,
    EmptyGraph,
    DimensionMismatch,
    Degenerate,
    EmptySeries,
    UncoveredNode,
    UnsupportedAlgorithm,
    DisconnectedInput,
    EmptySelection,
    NoConvergence,
    MissingCovariate,
    SingularInformation,
    Separation,
    ConfigError,
    MissingPrerequisite,
    IoError,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string &message);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace itemnet

#endif // ITEMNET_ERROR_HPP_
