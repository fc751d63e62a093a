// Copyright 2026 The blockcoh Authors.
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

#pragma once

#include "blockcoh/classify.hpp"
#include "blockcoh/counting.hpp"
#include "blockcoh/dephasing.hpp"
#include "blockcoh/generate.hpp"
#include "blockcoh/io.hpp"
#include "blockcoh/kraus.hpp"
#include "blockcoh/linalg.hpp"
#include "blockcoh/measures.hpp"
#include "blockcoh/naimark.hpp"
#include "blockcoh/partition.hpp"
#include "blockcoh/pbio.hpp"
#include "blockcoh/state.hpp"
#include "blockcoh/verify.hpp"
