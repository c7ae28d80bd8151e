#pragma once

#include "oih/errors.hpp"
#include "oih/poly.hpp"
#include "oih/rational.hpp"
#include "oih/oi.hpp"
#include "oih/hilbert.hpp"
#include "oih/words.hpp"
#include "oih/automata.hpp"
#include "oih/series.hpp"
#include "oih/analysis.hpp"
#include "oih/decomposition.hpp"
#include "oih/io.hpp"
