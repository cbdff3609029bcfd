// Copyright 2026 The fluxlab Authors
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

#ifndef FLUXLAB_FLUXLAB_H
#define FLUXLAB_FLUXLAB_H

#include "fluxlab/adiabaticity_errors.h"
#include "fluxlab/coupled_system.h"
#include "fluxlab/errors.h"
#include "fluxlab/fluxonium.h"
#include "fluxlab/noise_dephasing.h"
#include "fluxlab/pulse_schedule.h"
#include "fluxlab/quadrature.h"
#include "fluxlab/units.h"

#endif  // FLUXLAB_FLUXLAB_H
