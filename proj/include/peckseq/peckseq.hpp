// Copyright 2026 The peckseq Authors
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

#ifndef PECKSEQ_PECKSEQ_HPP_
#define PECKSEQ_PECKSEQ_HPP_

#include "peckseq/contfrac.hpp"
#include "peckseq/errors.hpp"
#include "peckseq/field.hpp"
#include "peckseq/format.hpp"
#include "peckseq/peck.hpp"
#include "peckseq/real.hpp"
#include "peckseq/stats.hpp"
#include "peckseq/unit_search.hpp"

#endif  // PECKSEQ_PECKSEQ_HPP_
