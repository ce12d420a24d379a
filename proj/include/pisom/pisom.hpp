#ifndef PISOM_PISOM_HPP_
#define PISOM_PISOM_HPP_

#include "enumerate.hpp"
#include "maps.hpp"
#include "matrix_order.hpp"
#include "numeric.hpp"
#include "order.hpp"
#include "sampling.hpp"
#include "serialize.hpp"
#include "structure.hpp"
#include "word.hpp"

#endif  // PISOM_PISOM_HPP_
