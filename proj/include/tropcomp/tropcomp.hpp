#pragma once

#include "tropcomp/error.hpp"
#include "tropcomp/rational.hpp"
#include "tropcomp/matrix.hpp"
#include "tropcomp/tropical.hpp"
#include "tropcomp/instances.hpp"
#include "tropcomp/matching_solver.hpp"
#include "tropcomp/tropical_bases.hpp"
#include "tropcomp/linalg.hpp"
#include "tropcomp/labels.hpp"
#include "tropcomp/dominance.hpp"
#include "tropcomp/lemke_howson.hpp"
#include "tropcomp/games.hpp"
#include "tropcomp/sat_reduction.hpp"
#include "tropcomp/oracles.hpp"
#include "tropcomp/generators.hpp"
#include "tropcomp/io.hpp"
