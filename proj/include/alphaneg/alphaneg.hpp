// Copyright 2026 The alphaneg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ALPHANEG_ALPHANEG_HPP
#define ALPHANEG_ALPHANEG_HPP

#include "alphaneg/barrier_sdp.hpp"
#include "alphaneg/bipartite_state.hpp"
#include "alphaneg/channels.hpp"
#include "alphaneg/divergence.hpp"
#include "alphaneg/errors.hpp"
#include "alphaneg/io.hpp"
#include "alphaneg/linalg.hpp"
#include "alphaneg/nelder_mead.hpp"
#include "alphaneg/pptgeom.hpp"
#include "alphaneg/properties.hpp"
#include "alphaneg/repro.hpp"
#include "alphaneg/resource.hpp"
#include "alphaneg/solver.hpp"
#include "alphaneg/states.hpp"

namespace alphaneg {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace alphaneg

#endif  // ALPHANEG_ALPHANEG_HPP
