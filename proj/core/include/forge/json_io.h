// Copyright 2026 The forge authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FORGE_JSON_IO_H
#define FORGE_JSON_IO_H

#include <string>

#include "forge/aux_ops.h"
#include "forge/stabilizer.h"

namespace forge {

/// Interchange form used by every CLI command:
///
///     { "n": int, "roles": ["input"|"output"|"virtual", ...],
///       "generators": ["-YI", ...] }
///
/// Generators use the Pauli text form. The reader checks shape (lengths,
/// parseable generators, known role names) but leaves group-level validation
/// to validate().
std::string tableau_to_json(const StabilizerTableau &t);
StabilizerTableau tableau_from_json(const std::string &text);

/// Operator-set form:
///
///     { "side": "input"|"output", "k_set": ["-YI", ...], "f_set": ["-ZZ"] }
///
/// The qubit count is the shared width of the listed operators; at least one
/// operator must be present.
std::string aux_to_json(const AuxOps &aux);
AuxOps aux_from_json(const std::string &text);

}  // namespace forge

#endif
