#pragma once

#include "cmf/apery.hpp"
#include "cmf/arith.hpp"
#include "cmf/coeffs.hpp"
#include "cmf/congruence.hpp"
#include "cmf/etaser.hpp"
#include "cmf/hecke.hpp"
#include "cmf/primerep.hpp"
#include "cmf/qexpansion.hpp"
#include "cmf/quadint.hpp"
#include "cmf/report_io.hpp"
#include "cmf/sweep.hpp"
