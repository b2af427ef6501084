#pragma once

#include "catalan/binary_tree.hpp"
#include "catalan/exact.hpp"
#include "catalan/fan.hpp"
#include "catalan/hull.hpp"
#include "catalan/json_io.hpp"
#include "catalan/permutation.hpp"
#include "catalan/polytope.hpp"
#include "catalan/sequences.hpp"
#include "catalan/triangulation.hpp"
#include "catalan/verify.hpp"
