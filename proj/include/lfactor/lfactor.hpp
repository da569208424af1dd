// Copyright 2026 The lfactor Authors
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

#ifndef LFACTOR_LFACTOR_HPP
#define LFACTOR_LFACTOR_HPP

#include "analysis.hpp"
#include "closed_forms.hpp"
#include "decompositions.hpp"
#include "expand.hpp"
#include "group.hpp"
#include "kernel.hpp"
#include "lproduct.hpp"
#include "normalization.hpp"
#include "param.hpp"
#include "poles.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "runner.hpp"

#endif // LFACTOR_LFACTOR_HPP
