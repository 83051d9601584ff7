#pragma once

#include "trajent/analysis.hpp"
#include "trajent/chain.hpp"
#include "trajent/dense.hpp"
#include "trajent/entropy_rate.hpp"
#include "trajent/error.hpp"
#include "trajent/generators.hpp"
#include "trajent/hitting.hpp"
#include "trajent/io.hpp"
#include "trajent/monte_carlo.hpp"
#include "trajent/random.hpp"
#include "trajent/report_io.hpp"
#include "trajent/spectral.hpp"
#include "trajent/stochastic_matrix.hpp"
#include "trajent/trajectory_entropy.hpp"
#include "trajent/velocity_report.hpp"
