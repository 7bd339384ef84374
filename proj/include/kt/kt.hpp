#pragma once

#include "kt/error.hpp"
#include "kt/ring.hpp"
#include "kt/polynomial.hpp"
#include "kt/free_module.hpp"
#include "kt/dense.hpp"
#include "kt/groebner.hpp"
#include "kt/presented.hpp"
#include "kt/complex.hpp"
#include "kt/homology.hpp"
#include "kt/resolution.hpp"
#include "kt/support.hpp"
#include "kt/koszul.hpp"
#include "kt/tate.hpp"
#include "kt/local_cohomology.hpp"
#include "kt/strong_reducer.hpp"
#include "kt/serialize.hpp"
