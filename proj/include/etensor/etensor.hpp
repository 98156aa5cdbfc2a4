// Copyright 2026 The etensor Authors
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

/// \file etensor.hpp
/// \brief Umbrella header.
#pragma once

#include "etensor/types.hpp"
#include "etensor/su_algebra.hpp"
#include "etensor/random.hpp"
#include "etensor/qudit_state.hpp"
#include "etensor/bloch_tensor.hpp"
#include "etensor/measure.hpp"
#include "etensor/local_ops.hpp"
#include "etensor/convex_roof.hpp"
#include "etensor/io.hpp"
#include "etensor/commands.hpp"
