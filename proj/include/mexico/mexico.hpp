// Copyright 2026 The mexico Authors
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

#ifndef MEXICO_MEXICO_HPP
#define MEXICO_MEXICO_HPP

#define MEXICO_VERSION "0.1.0"

#include "mexico/core.hpp"
#include "mexico/inference.hpp"
#include "mexico/io.hpp"
#include "mexico/matrix.hpp"
#include "mexico/metrics.hpp"
#include "mexico/rng.hpp"
#include "mexico/sim.hpp"
#include "mexico/simplex.hpp"
#include "mexico/skmeans.hpp"
#include "mexico/tail.hpp"

#endif  // MEXICO_MEXICO_HPP
