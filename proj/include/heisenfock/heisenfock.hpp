#pragma once

#include "heisenfock/config.hpp"
#include "heisenfock/expr.hpp"
#include "heisenfock/fock.hpp"
#include "heisenfock/generators.hpp"
#include "heisenfock/graded.hpp"
#include "heisenfock/heis_core.hpp"
#include "heisenfock/kdims.hpp"
#include "heisenfock/linalg.hpp"
#include "heisenfock/partitions.hpp"
#include "heisenfock/rational.hpp"
