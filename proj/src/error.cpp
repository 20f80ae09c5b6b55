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

#include "osn/error.hpp"

namespace osn {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AsymmetricRotation: return "AsymmetricRotation";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::ParallelEdge: return "ParallelEdge";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::NonPlanarRotation: return "NonPlanarRotation";
    case ErrorKind::OuterFaceUnset: return "OuterFaceUnset";
    case ErrorKind::UnknownFace: return "UnknownFace";
    case ErrorKind::NotIncident: return "NotIncident";
    case ErrorKind::SameFace: return "SameFace";
    case ErrorKind::DanglingVertex: return "DanglingVertex";
    case ErrorKind::NameCollision: return "NameCollision";
    case ErrorKind::InvalidCover: return "InvalidCover";
    case ErrorKind::ReplayFailure: return "ReplayFailure";
    case ErrorKind::NotOuterplane: return "NotOuterplane";
    case ErrorKind::SelfLoopPresent: return "SelfLoopPresent";
    case ErrorKind::CertificateFailure: return "CertificateFailure";
    case ErrorKind::NotBiconnected: return "NotBiconnected";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotCubic: return "NotCubic";
    case ErrorKind::NotACover: return "NotACover";
    case ErrorKind::NotAVertexCover: return "NotAVertexCover";
    case ErrorKind::InfeasibleParameters: return "InfeasibleParameters";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::NotMaximalPlanar: return "NotMaximalPlanar";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::LayoutFailure: return "LayoutFailure";
  }
  return "Unknown";
}

void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, std::string(error_name(kind)) + ": " + message);
}

}  // namespace osn
