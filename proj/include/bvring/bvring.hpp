#pragma once

#include "bvring/checks.hpp"
#include "bvring/combinat.hpp"
#include "bvring/error.hpp"
#include "bvring/expr.hpp"
#include "bvring/linalg.hpp"
#include "bvring/rational.hpp"
#include "bvring/ring.hpp"
#include "bvring/serialize.hpp"
#include "bvring/spectral.hpp"
