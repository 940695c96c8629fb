#pragma once

#include "rmideal/errors.hpp"
#include "rmideal/events.hpp"
#include "rmideal/exact_oracle.hpp"
#include "rmideal/graph.hpp"
#include "rmideal/ideal.hpp"
#include "rmideal/io.hpp"
#include "rmideal/moments.hpp"
#include "rmideal/montecarlo.hpp"
#include "rmideal/normality.hpp"
#include "rmideal/numeric.hpp"
#include "rmideal/parallel.hpp"
#include "rmideal/patterns.hpp"
#include "rmideal/sampling.hpp"
#include "rmideal/stable_sets.hpp"
#include "rmideal/vertex_set.hpp"
