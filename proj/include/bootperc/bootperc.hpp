#pragma once

#include "bootperc/constructions.hpp"
#include "bootperc/corpus.hpp"
#include "bootperc/graph.hpp"
#include "bootperc/graph6.hpp"
#include "bootperc/miner.hpp"
#include "bootperc/percolation.hpp"
#include "bootperc/search.hpp"
#include "bootperc/structure.hpp"
#include "bootperc/subsets.hpp"
#include "bootperc/verify.hpp"
#include "bootperc/vertex_set.hpp"
