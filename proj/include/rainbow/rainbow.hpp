#pragma once

#include "rainbow/vertex_set.hpp"
#include "rainbow/simple_graph.hpp"
#include "rainbow/colored_graph.hpp"
#include "rainbow/ecg_io.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/rainbow_search.hpp"
#include "rainbow/reduction.hpp"
#include "rainbow/counting_bounds.hpp"
#include "rainbow/matching_cover.hpp"
#include "rainbow/serialization.hpp"
#include "rainbow/verifier.hpp"
