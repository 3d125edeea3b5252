// Copyright 2026 The diracent Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "diracent/analytic.hpp"
#include "diracent/entanglement.hpp"
#include "diracent/errors.hpp"
#include "diracent/kinematics.hpp"
#include "diracent/states.hpp"
#include "diracent/sweep.hpp"
#include "diracent/tensor.hpp"
#include "diracent/verification.hpp"
