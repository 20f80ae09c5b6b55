// Copyright 2026 The osn Authors
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

#ifndef OSN_ERROR_HPP_
#define OSN_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace osn {

// Every failure the library reports carries one of these kinds. The CLI
// prints error_name(kind) so scripts can match on it.
enum class ErrorKind {
  // plane_graph
  AsymmetricRotation,
  SelfLoop,
  ParallelEdge,
  UnknownVertex,
  Disconnected,
  TooSmall,
  NonPlanarRotation,
  OuterFaceUnset,
  UnknownFace,
  // split_engine
  NotIncident,
  SameFace,
  DanglingVertex,
  NameCollision,
  InvalidCover,
  ReplayFailure,
  NotOuterplane,
  // cover_solver
  SelfLoopPresent,
  CertificateFailure,
  NotBiconnected,
  CapExceeded,
  // reductions
  NotCubic,
  NotACover,
  NotAVertexCover,
  // generators
  InfeasibleParameters,
  UnknownFamily,
  // bounds
  NotMaximalPlanar,
  // cli_io
  ParseError,
  LayoutFailure,
};

std::string_view error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  std::string_view name() const { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace osn

#endif  // OSN_ERROR_HPP_
