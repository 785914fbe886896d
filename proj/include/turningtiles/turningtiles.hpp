#pragma once

// Convenience header pulling in the whole library: game values and their
// algebra, textual notation, boards and solvers, and the board compiler.

#include "turningtiles/board.hpp"
#include "turningtiles/build.hpp"
#include "turningtiles/canonical.hpp"
#include "turningtiles/core.hpp"
#include "turningtiles/dyadic.hpp"
#include "turningtiles/game.hpp"
#include "turningtiles/named.hpp"
#include "turningtiles/notation.hpp"
#include "turningtiles/search.hpp"
