#pragma once

#include "zhegalkin/anf.hpp"
#include "zhegalkin/circuit.hpp"
#include "zhegalkin/digit_grid.hpp"
#include "zhegalkin/errors.hpp"
#include "zhegalkin/prime_field.hpp"
#include "zhegalkin/rotation.hpp"
#include "zhegalkin/truth_table.hpp"
#include "zhegalkin/unitary.hpp"
