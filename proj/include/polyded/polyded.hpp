#pragma once

#include "polyded/rational.hpp"
#include "polyded/polynomial.hpp"
#include "polyded/series.hpp"
#include "polyded/classical.hpp"
#include "polyded/report.hpp"
#include "polyded/polybernoulli.hpp"
#include "polyded/dedekind.hpp"
