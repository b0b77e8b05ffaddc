#pragma once

#include "clonelab/analyzers.hpp"
#include "clonelab/cloning.hpp"
#include "clonelab/cost.hpp"
#include "clonelab/decide.hpp"
#include "clonelab/election.hpp"
#include "clonelab/errors.hpp"
#include "clonelab/io.hpp"
#include "clonelab/oracle.hpp"
#include "clonelab/rational.hpp"
#include "clonelab/rng.hpp"
#include "clonelab/rules.hpp"
#include "clonelab/tournament.hpp"
