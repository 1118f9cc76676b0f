// Copyright 2026 The vdw-images Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "vdw/classic_potentials.hpp"
#include "vdw/closed_form.hpp"
#include "vdw/core_types.hpp"
#include "vdw/ez_evaluator.hpp"
#include "vdw/image_method.hpp"
#include "vdw/oracle.hpp"
#include "vdw/series_fit.hpp"
#include "vdw/validation.hpp"
