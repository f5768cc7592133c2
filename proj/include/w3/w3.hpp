#pragma once

// Exact workbench for the W3 vertex algebra at central charge 6/5: vacuum
// module normal forms, the weight-12 singular vector, the Zhu algebra and
// its 20-point spectrum, the C2 quotient, and the q-series characters of
// the 20 irreducible modules.

#include "w3/rational.hpp"
#include "w3/state.hpp"
#include "w3/engine.hpp"
#include "w3/linalg.hpp"
#include "w3/singular.hpp"
#include "w3/bipoly.hpp"
#include "w3/zhu.hpp"
#include "w3/groebner.hpp"
#include "w3/spectrum.hpp"
#include "w3/qseries.hpp"
#include "w3/minimal_chars.hpp"
#include "w3/characters.hpp"
#include "w3/modular.hpp"
#include "w3/expr.hpp"
#include "w3/json_io.hpp"
#include "w3/verify.hpp"
