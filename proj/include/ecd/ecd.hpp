#pragma once

#include "ecd/analysis.hpp"
#include "ecd/bitset.hpp"
#include "ecd/blocks_file.hpp"
#include "ecd/cli.hpp"
#include "ecd/combinatorics.hpp"
#include "ecd/constructions.hpp"
#include "ecd/design.hpp"
#include "ecd/ec.hpp"
#include "ecd/error.hpp"
#include "ecd/graph.hpp"
#include "ecd/parallel.hpp"
#include "ecd/rational.hpp"
#include "ecd/report.hpp"
#include "ecd/rng.hpp"
#include "ecd/verify.hpp"
