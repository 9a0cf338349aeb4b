// Copyright 2026 The Authors.
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

#ifndef DECMIN_ALL_HPP
#define DECMIN_ALL_HPP

#include "decmin/arith.hpp"
#include "decmin/conjugate.hpp"
#include "decmin/continuous.hpp"
#include "decmin/core.hpp"
#include "decmin/decmin.hpp"
#include "decmin/duality.hpp"
#include "decmin/flows.hpp"
#include "decmin/gen.hpp"
#include "decmin/json_io.hpp"
#include "decmin/majorize.hpp"
#include "decmin/mconvex.hpp"
#include "decmin/partition.hpp"
#include "decmin/rng.hpp"
#include "decmin/selfcheck.hpp"
#include "decmin/setfn.hpp"

#endif  // DECMIN_ALL_HPP
