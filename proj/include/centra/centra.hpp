/**************************************************************************
 * include/centra/centra.hpp
 *
 * Copyright 2026 The centra Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include "centra/catalogue.hpp"
#include "centra/errors.hpp"
#include "centra/ffield.hpp"
#include "centra/grpstruct.hpp"
#include "centra/lifting.hpp"
#include "centra/linalg.hpp"
#include "centra/modrep.hpp"
#include "centra/ncgraph.hpp"
#include "centra/perm_group.hpp"
#include "centra/perm_io.hpp"
#include "centra/permutation.hpp"
#include "centra/pi_set.hpp"
#include "centra/presentation.hpp"
#include "centra/properties.hpp"
#include "centra/report.hpp"
#include "centra/tables.hpp"
