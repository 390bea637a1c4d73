#pragma once

/// Umbrella header: exact Schur-ring machinery over cyclic-type groups.

#include "classify.hpp"
#include "cli.hpp"
#include "element.hpp"
#include "enumerate.hpp"
#include "group.hpp"
#include "io.hpp"
#include "partition.hpp"
#include "rational.hpp"
#include "schur_ring.hpp"
#include "span.hpp"
#include "subgroup.hpp"
#include "verdict.hpp"
