#pragma once

#include "baselines.hpp"
#include "bootstrap.hpp"
#include "cross_fit.hpp"
#include "csv.hpp"
#include "curve.hpp"
#include "dataset.hpp"
#include "errors.hpp"
#include "oracle.hpp"
#include "quantile.hpp"
#include "rank_profile.hpp"
#include "ranking.hpp"
#include "removal.hpp"
#include "sample.hpp"
#include "selection.hpp"
#include "serialize.hpp"
#include "synthetic.hpp"
#include "theta.hpp"
#include "trainer.hpp"
#include "threading.hpp"
