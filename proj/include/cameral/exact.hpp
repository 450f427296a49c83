#pragma once

// Exact scalar, polynomial and series kernel.

#include "cameral/exact/differential.hpp"
#include "cameral/exact/dual.hpp"
#include "cameral/exact/poly.hpp"
#include "cameral/exact/quadext.hpp"
#include "cameral/exact/rational.hpp"
#include "cameral/exact/resultant.hpp"
#include "cameral/exact/roots.hpp"
#include "cameral/exact/series.hpp"
