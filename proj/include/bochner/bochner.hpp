#pragma once

#include "bochner/errors.hpp"
#include "bochner/exact.hpp"
#include "bochner/lemmas.hpp"
#include "bochner/poly.hpp"
#include "bochner/hessenberg.hpp"
#include "bochner/operator.hpp"
#include "bochner/spectral.hpp"
#include "bochner/shapiro.hpp"
#include "bochner/recurrence.hpp"
#include "bochner/inverse.hpp"
#include "bochner/presets.hpp"
#include "bochner/io.hpp"
