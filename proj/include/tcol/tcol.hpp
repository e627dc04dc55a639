#pragma once

#include "tcol/bench.hpp"
#include "tcol/coloring.hpp"
#include "tcol/deadline.hpp"
#include "tcol/dgc.hpp"
#include "tcol/dimacs.hpp"
#include "tcol/exact.hpp"
#include "tcol/graph.hpp"
#include "tcol/greedy.hpp"
#include "tcol/rng.hpp"
#include "tcol/turbo.hpp"
