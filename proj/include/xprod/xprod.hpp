#pragma once

#include "xprod/classify.hpp"
#include "xprod/cocycles.hpp"
#include "xprod/codes.hpp"
#include "xprod/cohomology.hpp"
#include "xprod/crossring.hpp"
#include "xprod/error.hpp"
#include "xprod/ffield.hpp"
#include "xprod/groups.hpp"
#include "xprod/isometry.hpp"
#include "xprod/modlin.hpp"
#include "xprod/numeric.hpp"
