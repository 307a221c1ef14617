#pragma once

#include "xychain/chain_model.hpp"
#include "xychain/correlations.hpp"
#include "xychain/exact_oracle.hpp"
#include "xychain/reproduce.hpp"
#include "xychain/sweep.hpp"
#include "xychain/verify.hpp"
#include "xychain/xstate.hpp"
