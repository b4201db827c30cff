// Copyright 2026 The fairspread Authors.
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

// Umbrella header for the fairspread library.

#ifndef FAIRSPREAD_FAIRSPREAD_HPP_
#define FAIRSPREAD_FAIRSPREAD_HPP_

#include "fairspread/cascade.hpp"
#include "fairspread/cli.hpp"
#include "fairspread/coverage.hpp"
#include "fairspread/errors.hpp"
#include "fairspread/exhaustive.hpp"
#include "fairspread/experiments.hpp"
#include "fairspread/fixtures.hpp"
#include "fairspread/graph.hpp"
#include "fairspread/graph_io.hpp"
#include "fairspread/greedy.hpp"
#include "fairspread/objectives.hpp"
#include "fairspread/parallel.hpp"
#include "fairspread/rational.hpp"
#include "fairspread/rng.hpp"
#include "fairspread/saturate.hpp"
#include "fairspread/utility.hpp"
#include "fairspread/welfare.hpp"

#endif  // FAIRSPREAD_FAIRSPREAD_HPP_
