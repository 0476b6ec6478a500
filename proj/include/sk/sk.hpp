#pragma once

#include "sk/arith.hpp"
#include "sk/bernoulli.hpp"
#include "sk/character.hpp"
#include "sk/cohen.hpp"
#include "sk/format.hpp"
#include "sk/hecke.hpp"
#include "sk/jacobi.hpp"
#include "sk/jacobi_builtin.hpp"
#include "sk/rational.hpp"
#include "sk/relations.hpp"
#include "sk/scalar.hpp"
#include "sk/siegel.hpp"
