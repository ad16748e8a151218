#pragma once

#include "infothresh/adequacy.hpp"
#include "infothresh/chain.hpp"
#include "infothresh/chain_config.hpp"
#include "infothresh/curve.hpp"
#include "infothresh/errors.hpp"
#include "infothresh/numeric.hpp"
#include "infothresh/report.hpp"
#include "infothresh/simulate.hpp"
#include "infothresh/threshold.hpp"
#include "infothresh/types.hpp"
