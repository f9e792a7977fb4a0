#pragma once

#include "workbench/canonical_order.hpp"
#include "workbench/counting_order.hpp"
#include "workbench/diagonal.hpp"
#include "workbench/enumerator.hpp"
#include "workbench/error.hpp"
#include "workbench/machine.hpp"
#include "workbench/machine_text.hpp"
