#pragma once

#include "esymdom/esym.hpp"
#include "esymdom/functionals.hpp"
#include "esymdom/matrix.hpp"
#include "esymdom/polyroots.hpp"
#include "esymdom/quadrature.hpp"
#include "esymdom/rng.hpp"
#include "esymdom/sampling.hpp"
#include "esymdom/verify.hpp"
#include "esymdom/version.hpp"
