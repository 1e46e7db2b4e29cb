#pragma once

#include "knotcert/bracket.hpp"
#include "knotcert/certify.hpp"
#include "knotcert/diagram.hpp"
#include "knotcert/diagram_ops.hpp"
#include "knotcert/laurent.hpp"
#include "knotcert/moves.hpp"
#include "knotcert/surgery.hpp"
#include "knotcert/torus.hpp"
