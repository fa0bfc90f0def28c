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

#include "grapheq/reference_tables.h"

namespace grapheq {

const std::vector<ReferenceTable>& reference_tables() {
  static const std::vector<ReferenceTable> tables = {
      {"nash-low", "NC00_C5", Criterion::kNash, "1/4", "(0, 1/3)", 20, 4,
       {
           {"21111", {{2, 1}, {0, 3}, {0, 3}, {0, 3}, {0, 3}}, {2, 13}},
           {"33111", {{2, 1}, {2, 1}, {0, 3}, {0, 3}, {0, 3}}, {1, 11}},
           {"31311", {{2, 1}, {0, 3}, {2, 1}, {0, 3}, {0, 3}}, {4, 11}},
           {"33331", {{2, 3}, {2, 3}, {2, 3}, {2, 3}, {0, 5}}, {8, 17}},
       }},
      {"nash-mid", "NC00_C5", Criterion::kNash, "2/5", "(1/3, 1/2)", 25, 4,
       {
           {"13110", {{0, 5}, {2, 3}, {0, 5}, {0, 5}, {5, 0}}, {7, 18}},
           {"22111", {{3, 2}, {3, 2}, {0, 5}, {0, 5}, {0, 5}}, {6, 19}},
           {"33111", {{2, 1}, {2, 1}, {0, 3}, {0, 3}, {0, 3}}, {4, 11}},
           {"33331", {{2, 3}, {2, 3}, {2, 3}, {2, 3}, {0, 5}}, {8, 17}},
       }},
      {"nash-high", "NC00_C5", Criterion::kNash, "2/3", "(1/2, 1]", 40, 6,
       {
           {"32110", {{2, 3}, {4, 1}, {0, 5}, {0, 5}, {5, 0}}, {11, 14}},
           {"13110", {{0, 5}, {2, 3}, {0, 5}, {0, 5}, {5, 0}}, {7, 18}},
           {"22111", {{3, 2}, {3, 2}, {0, 5}, {0, 5}, {0, 5}}, {6, 19}},
           {"33121", {{2, 3}, {2, 3}, {0, 5}, {4, 1}, {0, 5}}, {8, 17}},
           {"33331", {{2, 3}, {2, 3}, {2, 3}, {2, 3}, {0, 5}}, {8, 17}},
           {"32322", {{2, 3}, {4, 1}, {2, 3}, {3, 2}, {3, 2}}, {14, 11}},
       }},
      {"pareto-low", "NC00_C5", Criterion::kPareto, "1/4", "[0, 1/3]", 121, 18,
       {
           {"21100", {{3, 2}, {0, 5}, {0, 5}, {5, 0}, {5, 0}}, {13, 12}},
           {"33200", {{1, 2}, {1, 2}, {1, 2}, {3, 0}, {3, 0}}, {9, 6}},
           {"32110", {{2, 3}, {4, 1}, {0, 5}, {0, 5}, {5, 0}}, {11, 14}},
           {"13110", {{0, 5}, {2, 3}, {0, 5}, {0, 5}, {5, 0}}, {7, 18}},
           {"13310", {{0, 5}, {1, 4}, {1, 4}, {0, 5}, {5, 0}}, {7, 18}},
           {"23120", {{3, 2}, {1, 4}, {0, 5}, {3, 2}, {5, 0}}, {12, 13}},
           {"32230", {{1, 4}, {4, 1}, {4, 1}, {1, 4}, {5, 0}}, {15, 10}},
           {"21111", {{2, 1}, {0, 3}, {0, 3}, {0, 3}, {0, 3}}, {2, 13}},
           {"22111", {{3, 2}, {3, 2}, {0, 5}, {0, 5}, {0, 5}}, {6, 19}},
           {"33111", {{2, 1}, {2, 1}, {0, 3}, {0, 3}, {0, 3}}, {4, 11}},
           {"31311", {{2, 1}, {0, 3}, {2, 1}, {0, 3}, {0, 3}}, {4, 11}},
           {"33121", {{2, 3}, {2, 3}, {0, 5}, {4, 1}, {0, 5}}, {8, 17}},
           {"33221", {{2, 3}, {1, 4}, {3, 2}, {3, 2}, {0, 5}}, {9, 16}},
           {"32321", {{1, 2}, {2, 1}, {2, 1}, {2, 1}, {0, 3}}, {7, 8}},
           {"32231", {{1, 2}, {1, 2}, {1, 2}, {1, 2}, {0, 3}}, {4, 11}},
           {"33331", {{2, 3}, {2, 3}, {2, 3}, {2, 3}, {0, 5}}, {8, 17}},
           {"32322", {{2, 3}, {4, 1}, {2, 3}, {3, 2}, {3, 2}}, {14, 11}},
           {"33333", {{1, 4}, {1, 4}, {1, 4}, {1, 4}, {1, 4}}, {5, 20}},
       }},
      {"pareto-mid", "NC00_C5", Criterion::kPareto, "2/5", "[1/3, 1/2]", 91, 14,
       {
           {"21100", {{3, 2}, {0, 5}, {0, 5}, {5, 0}, {5, 0}}, {13, 12}},
           {"32110", {{2, 3}, {4, 1}, {0, 5}, {0, 5}, {5, 0}}, {11, 14}},
           {"13110", {{0, 5}, {2, 3}, {0, 5}, {0, 5}, {5, 0}}, {7, 18}},
           {"13310", {{0, 5}, {1, 4}, {1, 4}, {0, 5}, {5, 0}}, {7, 18}},
           {"23120", {{3, 2}, {1, 4}, {0, 5}, {3, 2}, {5, 0}}, {12, 13}},
           {"32230", {{1, 4}, {4, 1}, {4, 1}, {1, 4}, {5, 0}}, {15, 10}},
           {"22111", {{3, 2}, {3, 2}, {0, 5}, {0, 5}, {0, 5}}, {6, 19}},
           {"33111", {{2, 1}, {2, 1}, {0, 3}, {0, 3}, {0, 3}}, {4, 11}},
           {"33121", {{2, 3}, {2, 3}, {0, 5}, {4, 1}, {0, 5}}, {8, 17}},
           {"33221", {{2, 3}, {1, 4}, {3, 2}, {3, 2}, {0, 5}}, {9, 16}},
           {"32231", {{1, 2}, {1, 2}, {1, 2}, {1, 2}, {0, 3}}, {4, 11}},
           {"33331", {{2, 3}, {2, 3}, {2, 3}, {2, 3}, {0, 5}}, {8, 17}},
           {"32322", {{2, 3}, {4, 1}, {2, 3}, {3, 2}, {3, 2}}, {14, 11}},
           {"33333", {{1, 4}, {1, 4}, {1, 4}, {1, 4}, {1, 4}}, {5, 20}},
       }},
      {"pareto-high", "NC00_C5", Criterion::kPareto, "2/3", "[1/2, 1]", 81, 12,
       {
           {"21100", {{3, 2}, {0, 5}, {0, 5}, {5, 0}, {5, 0}}, {13, 12}},
           {"32110", {{2, 3}, {4, 1}, {0, 5}, {0, 5}, {5, 0}}, {11, 14}},
           {"13110", {{0, 5}, {2, 3}, {0, 5}, {0, 5}, {5, 0}}, {7, 18}},
           {"13310", {{0, 5}, {1, 4}, {1, 4}, {0, 5}, {5, 0}}, {7, 18}},
           {"23120", {{3, 2}, {1, 4}, {0, 5}, {3, 2}, {5, 0}}, {12, 13}},
           {"32230", {{1, 4}, {4, 1}, {4, 1}, {1, 4}, {5, 0}}, {15, 10}},
           {"22111", {{3, 2}, {3, 2}, {0, 5}, {0, 5}, {0, 5}}, {6, 19}},
           {"33121", {{2, 3}, {2, 3}, {0, 5}, {4, 1}, {0, 5}}, {8, 17}},
           {"33221", {{2, 3}, {1, 4}, {3, 2}, {3, 2}, {0, 5}}, {9, 16}},
           {"33331", {{2, 3}, {2, 3}, {2, 3}, {2, 3}, {0, 5}}, {8, 17}},
           {"32322", {{2, 3}, {4, 1}, {2, 3}, {3, 2}, {3, 2}}, {14, 11}},
           {"33333", {{1, 4}, {1, 4}, {1, 4}, {1, 4}, {1, 4}}, {5, 20}},
       }},
      {"nc01-mid", "NC01_C5", Criterion::kNash, "2/5", "[1/3, 1/2]", 76, 13,
       {
           {"11200", {{0, 5}, {0, 5}, {2, 3}, {5, 0}, {5, 0}}, {12, 13}},
           {"32110", {{3, 2}, {3, 2}, {0, 5}, {0, 5}, {5, 0}}, {11, 14}},
           {"13110", {{0, 5}, {3, 2}, {0, 5}, {0, 5}, {5, 0}}, {8, 17}},
           {"32210", {{2, 3}, {2, 3}, {2, 3}, {0, 5}, {5, 0}}, {11, 14}},
           {"13310", {{0, 5}, {2, 3}, {2, 3}, {0, 5}, {5, 0}}, {9, 16}},
           {"13120", {{0, 5}, {2, 3}, {0, 5}, {2, 3}, {5, 0}}, {9, 16}},
           {"21320", {{2, 3}, {0, 5}, {2, 3}, {2, 3}, {5, 0}}, {11, 14}},
           {"22111", {{3, 2}, {2, 3}, {0, 5}, {0, 5}, {0, 5}}, {5, 20}},
           {"33121", {{2, 3}, {3, 2}, {0, 5}, {3, 2}, {0, 5}}, {8, 17}},
           {"33221", {{3, 2}, {2, 3}, {2, 3}, {3, 2}, {0, 5}}, {10, 15}},
           {"33331", {{3, 2}, {2, 3}, {3, 2}, {3, 2}, {0, 5}}, {11, 14}},
           {"32322", {{3, 2}, {3, 2}, {3, 2}, {3, 2}, {2, 3}}, {14, 11}},
           {"33333", {{2, 3}, {2, 3}, {2, 3}, {2, 3}, {2, 3}}, {10, 15}},
       }},
      {"nc01-high", "NC01_C5", Criterion::kNash, "2/3", "[1/2, 1]", 40, 6,
       {
           {"32110", {{3, 2}, {3, 2}, {0, 5}, {0, 5}, {5, 0}}, {11, 14}},
           {"13110", {{0, 5}, {3, 2}, {0, 5}, {0, 5}, {5, 0}}, {8, 17}},
           {"22111", {{3, 2}, {2, 3}, {0, 5}, {0, 5}, {0, 5}}, {5, 20}},
           {"33121", {{2, 3}, {3, 2}, {0, 5}, {3, 2}, {0, 5}}, {8, 17}},
           {"33331", {{3, 2}, {2, 3}, {3, 2}, {3, 2}, {0, 5}}, {11, 14}},
           {"32322", {{3, 2}, {3, 2}, {3, 2}, {3, 2}, {2, 3}}, {14, 11}},
       }},
  };
  return tables;
}

}  // namespace grapheq
