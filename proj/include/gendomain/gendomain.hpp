#ifndef GENDOMAIN_GENDOMAIN_HPP
#define GENDOMAIN_GENDOMAIN_HPP

#include "gendomain/convergence.hpp"
#include "gendomain/errors.hpp"
#include "gendomain/lattice.hpp"
#include "gendomain/recovery.hpp"
#include "gendomain/serialization.hpp"
#include "gendomain/spectral.hpp"
#include "gendomain/structmat.hpp"
#include "gendomain/symbol.hpp"

#endif // GENDOMAIN_GENDOMAIN_HPP
