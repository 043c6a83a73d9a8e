#pragma once

#include "lomnitz/creep.hpp"
#include "lomnitz/errors.hpp"
#include "lomnitz/hadamard.hpp"
#include "lomnitz/laplace.hpp"
#include "lomnitz/relaxation.hpp"
#include "lomnitz/special_functions.hpp"
