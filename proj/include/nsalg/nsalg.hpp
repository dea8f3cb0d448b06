#pragma once

#include "algebra.hpp"
#include "classify.hpp"
#include "corpus.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "oracle.hpp"
#include "rational.hpp"
#include "rectangle.hpp"
#include "semigroup.hpp"
