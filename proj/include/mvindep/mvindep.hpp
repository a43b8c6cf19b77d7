// Copyright 2026 The mvindep Authors
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

// Umbrella header: multivariate independence and k-sample testing.

#pragma once

#include "mvindep/inference.hpp"
#include "mvindep/io.hpp"
#include "mvindep/pairwise.hpp"
#include "mvindep/power.hpp"
#include "mvindep/rng.hpp"
#include "mvindep/simulations.hpp"
#include "mvindep/stats/distance.hpp"
#include "mvindep/stats/hhg.hpp"
#include "mvindep/stats/mgc.hpp"
#include "mvindep/stats/multivariate.hpp"
#include "mvindep/stats/registry.hpp"
#include "mvindep/stats/univariate.hpp"
#include "mvindep/types.hpp"
