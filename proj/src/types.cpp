// Copyright 2026-present the navgraph authors
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

#include "navgraph/types.hpp"

namespace navgraph {

const char* errc_name(errc code) {
  switch (code) {
    case errc::out_of_range: return "OutOfRange";
    case errc::duplicate_points: return "DuplicatePoints";
    case errc::non_finite_distance: return "NonFiniteDistance";
    case errc::size_mismatch: return "SizeMismatch";
    case errc::wrong_kind: return "WrongKind";
    case errc::wrong_instance: return "WrongInstance";
    case errc::too_few_nodes: return "TooFewNodes";
    case errc::degenerate_hoods: return "DegenerateHoods";
    case errc::io_error: return "IoError";
    case errc::bad_format: return "BadFormat";
  }
  return "UnknownError";
}

void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace navgraph
