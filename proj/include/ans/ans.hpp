#pragma once

// Umbrella header: the whole library in one include.

#include "ans/alphabet.hpp"
#include "ans/automaton.hpp"
#include "ans/automaton_ops.hpp"
#include "ans/congruence.hpp"
#include "ans/decision.hpp"
#include "ans/enumerating_series.hpp"
#include "ans/errors.hpp"
#include "ans/io.hpp"
#include "ans/linalg.hpp"
#include "ans/regex.hpp"
#include "ans/representation.hpp"
#include "ans/scalar.hpp"
#include "ans/system.hpp"
