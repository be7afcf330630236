// Copyright 2026 The hamcomp Authors.
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

#pragma once

#include "hamcomp/bounds.hpp"
#include "hamcomp/cayley.hpp"
#include "hamcomp/cube.hpp"
#include "hamcomp/graphs.hpp"
#include "hamcomp/io.hpp"
#include "hamcomp/johnson.hpp"
#include "hamcomp/kappa.hpp"
#include "hamcomp/landau.hpp"
#include "hamcomp/perm.hpp"
#include "hamcomp/search.hpp"
#include "hamcomp/svg.hpp"
#include "hamcomp/verify.hpp"
