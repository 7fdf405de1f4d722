#pragma once

// Umbrella header for the tug library. The CLI layer stays separate because
// it pulls in third-party parsing and JSON headers.

#include "tug/analysis.hpp"
#include "tug/coalition.hpp"
#include "tug/error.hpp"
#include "tug/game.hpp"
#include "tug/generators.hpp"
#include "tug/io.hpp"
#include "tug/permutation.hpp"
#include "tug/rational.hpp"
#include "tug/solutions.hpp"
