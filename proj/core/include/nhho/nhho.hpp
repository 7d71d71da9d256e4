#pragma once

#include "nhho/error.hpp"
#include "nhho/hamiltonian.hpp"
#include "nhho/ladder_polynomial.hpp"
#include "nhho/lie_closed_form.hpp"
#include "nhho/perturbation.hpp"
#include "nhho/position_space.hpp"
#include "nhho/spectral.hpp"
