// Copyright 2026 The leafc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "leafc/errors.hpp"
#include "leafc/hash.hpp"
#include "leafc/version.hpp"

#include "leafc/image/buffer.hpp"
#include "leafc/image/codec.hpp"
#include "leafc/image/color.hpp"
#include "leafc/image/kernel.hpp"
#include "leafc/image/plasma.hpp"
#include "leafc/image/quantize.hpp"
#include "leafc/image/resize.hpp"
#include "leafc/image/rng.hpp"

#include "leafc/corrupt/apply.hpp"
#include "leafc/corrupt/default_table.hpp"
#include "leafc/corrupt/kind.hpp"
#include "leafc/corrupt/params.hpp"
#include "leafc/corrupt/severity_table.hpp"

#include "leafc/dataset/builder.hpp"
#include "leafc/dataset/layout.hpp"
#include "leafc/dataset/seed.hpp"
#include "leafc/dataset/verify.hpp"

#include "leafc/metrics/records.hpp"
#include "leafc/metrics/scores.hpp"
#include "leafc/metrics/summary.hpp"

#include "leafc/report/bundle.hpp"
