// Copyright 2026 The stabline Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Umbrella header.

#ifndef STABLINE_STABLINE_HPP
#define STABLINE_STABLINE_HPP

#include "stabline/dual.hpp"
#include "stabline/error.hpp"
#include "stabline/geometry.hpp"
#include "stabline/instance.hpp"
#include "stabline/rational.hpp"
#include "stabline/selectors.hpp"
#include "stabline/stabbing.hpp"
#include "stabline/svg.hpp"

#endif  // STABLINE_STABLINE_HPP
