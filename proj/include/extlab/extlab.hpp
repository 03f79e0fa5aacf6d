#pragma once

#include "extlab/abelian.hpp"
#include "extlab/automorphism.hpp"
#include "extlab/cochain.hpp"
#include "extlab/coeff_module.hpp"
#include "extlab/cohomology.hpp"
#include "extlab/commands.hpp"
#include "extlab/error.hpp"
#include "extlab/extension.hpp"
#include "extlab/free_group.hpp"
#include "extlab/group.hpp"
#include "extlab/heisenberg.hpp"
#include "extlab/integer.hpp"
#include "extlab/io.hpp"
#include "extlab/matrix.hpp"
#include "extlab/obstruction.hpp"
#include "extlab/quasihom.hpp"
#include "extlab/realization.hpp"
#include "extlab/report.hpp"
#include "extlab/smith.hpp"
#include "extlab/symbolic_zoo.hpp"
