#pragma once

#include "cvxgap/bounds.hpp"
#include "cvxgap/campaign.hpp"
#include "cvxgap/convex_function.hpp"
#include "cvxgap/csv.hpp"
#include "cvxgap/enclosure.hpp"
#include "cvxgap/errors.hpp"
#include "cvxgap/gaps.hpp"
#include "cvxgap/generator.hpp"
#include "cvxgap/golden_section.hpp"
#include "cvxgap/grid.hpp"
#include "cvxgap/integrate.hpp"
#include "cvxgap/interval.hpp"
#include "cvxgap/json_writer.hpp"
#include "cvxgap/kernel.hpp"
#include "cvxgap/rng.hpp"
#include "cvxgap/tolerance.hpp"
#include "cvxgap/weights.hpp"
