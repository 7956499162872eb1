#pragma once

#include "gfo/automaton.hpp"
#include "gfo/error.hpp"
#include "gfo/genfun.hpp"
#include "gfo/linear_solve.hpp"
#include "gfo/oracle.hpp"
#include "gfo/poly.hpp"
#include "gfo/ratfun.hpp"
#include "gfo/series.hpp"
#include "gfo/wilf.hpp"
#include "gfo/witness.hpp"
#include "gfo/word.hpp"
