// ergoflow.hpp — convenience umbrella header

#pragma once

#include "ergoflow/correlations.hpp"
#include "ergoflow/eig.hpp"
#include "ergoflow/errors.hpp"
#include "ergoflow/hamiltonians.hpp"
#include "ergoflow/io.hpp"
#include "ergoflow/matrix.hpp"
#include "ergoflow/random.hpp"
#include "ergoflow/reproduction.hpp"
#include "ergoflow/states.hpp"
#include "ergoflow/thermo.hpp"
