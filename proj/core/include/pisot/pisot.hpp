#pragma once

#include <pisot/algebra.hpp>
#include <pisot/alpha_adic.hpp>
#include <pisot/beta.hpp>
#include <pisot/errors.hpp>
#include <pisot/notation.hpp>
#include <pisot/rational_psi.hpp>
#include <pisot/transducer.hpp>
#include <pisot/words.hpp>
