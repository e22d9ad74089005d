#pragma once

// Engine umbrella header. The CLI and HTTP front ends live under qegs/app/.

#include "qegs/bimatrix.hpp"
#include "qegs/error.hpp"
#include "qegs/ewl.hpp"
#include "qegs/extensions.hpp"
#include "qegs/format.hpp"
#include "qegs/game_io.hpp"
#include "qegs/polynomial.hpp"
#include "qegs/quad_algebraic.hpp"
#include "qegs/rational.hpp"
#include "qegs/report.hpp"
#include "qegs/result_json.hpp"
#include "qegs/solver.hpp"
#include "qegs/sweep.hpp"
#include "qegs/version.hpp"
