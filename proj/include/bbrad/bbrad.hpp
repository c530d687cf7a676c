// bbrad.hpp - umbrella header
//
// Copyright (C) 2026 The bbrad authors.
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include "bbrad/closedform.hpp"
#include "bbrad/kinetics.hpp"
#include "bbrad/modesum.hpp"
#include "bbrad/quadrature.hpp"
#include "bbrad/specfun.hpp"
