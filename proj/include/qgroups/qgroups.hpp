#pragma once

// Everything except the fault-injection hooks under qgroups/testing/.

#include "qgroups/errors.hpp"
#include "qgroups/qscalar.hpp"
#include "qgroups/linear_combination.hpp"
#include "qgroups/expression_parser.hpp"
#include "qgroups/report.hpp"
#include "qgroups/hopf.hpp"
#include "qgroups/rewriting.hpp"
#include "qgroups/serre.hpp"
#include "qgroups/uqsl2.hpp"
#include "qgroups/oqsl2.hpp"
#include "qgroups/linalg.hpp"
#include "qgroups/repmod.hpp"
#include "qgroups/pairing.hpp"
#include "qgroups/crystal.hpp"
#include "qgroups/crystal_io.hpp"
#include "qgroups/crystal_expr.hpp"
