#pragma once

#include "qbench/bits.hpp"
#include "qbench/circuit.hpp"
#include "qbench/errors.hpp"
#include "qbench/generators/chemistry.hpp"
#include "qbench/generators/copula.hpp"
#include "qbench/generators/faa.hpp"
#include "qbench/generators/fixed_angles.hpp"
#include "qbench/generators/hidden_shift.hpp"
#include "qbench/generators/image.hpp"
#include "qbench/generators/mps_loading.hpp"
#include "qbench/generators/qaoa.hpp"
#include "qbench/generators/qft_challenges.hpp"
#include "qbench/harness/backend.hpp"
#include "qbench/harness/graphs.hpp"
#include "qbench/harness/instance_io.hpp"
#include "qbench/harness/report.hpp"
#include "qbench/harness/runner.hpp"
#include "qbench/maxcut.hpp"
#include "qbench/noise.hpp"
#include "qbench/scoring.hpp"
#include "qbench/simulator.hpp"
#include "qbench/tts.hpp"
