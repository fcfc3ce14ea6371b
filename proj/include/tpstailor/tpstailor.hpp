// This code is part of tpstailor.
//
// (C) Copyright tpstailor contributors 2026.
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

// Umbrella header.

#include "tpstailor/algebra.hpp"
#include "tpstailor/linalg.hpp"
#include "tpstailor/schmidt.hpp"
#include "tpstailor/spin.hpp"
#include "tpstailor/tailor.hpp"
#include "tpstailor/types.hpp"
