#pragma once

#include "benlab/contlaw.hpp"
#include "benlab/digits.hpp"
#include "benlab/kxfit.hpp"
#include "benlab/parallel.hpp"
#include "benlab/random.hpp"
#include "benlab/rational.hpp"
#include "benlab/ross.hpp"
#include "benlab/series.hpp"
#include "benlab/sweep.hpp"
