// Copyright 2026 The grapheq Authors
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

// Reference equilibrium tables for the C5 games, transcribed verbatim. Each
// row lists a representative profile, the utilities scaled by 6 and the
// social welfare scaled by 30 as (v0, v1) coefficient pairs. Obvious typos
// are kept; the checks decide what to make of them.

#ifndef GRAPHEQ_REFERENCE_TABLES_H_
#define GRAPHEQ_REFERENCE_TABLES_H_

#include <string>
#include <vector>

#include "grapheq/classical.h"

namespace grapheq {

struct ReferenceRow {
  std::string profile;
  int utilities_x6[5][2];
  int welfare_x30[2];
};

struct ReferenceTable {
  std::string name;
  std::string game;
  Criterion criterion;
  std::string sample_ratio;  // a v0/v1 inside the table's range
  std::string range;
  int solutions;
  int distinct;
  std::vector<ReferenceRow> rows;
};

const std::vector<ReferenceTable>& reference_tables();

}  // namespace grapheq

#endif  // GRAPHEQ_REFERENCE_TABLES_H_
