#pragma once

// Umbrella header.

#include "constalg/derivation.hpp"
#include "constalg/dill_order.hpp"
#include "constalg/error.hpp"
#include "constalg/groebner.hpp"
#include "constalg/instance.hpp"
#include "constalg/kernel_basis.hpp"
#include "constalg/linalg.hpp"
#include "constalg/monomial.hpp"
#include "constalg/polynomial.hpp"
#include "constalg/presentation.hpp"
#include "constalg/rational.hpp"
#include "constalg/text.hpp"
#include "constalg/verify.hpp"
