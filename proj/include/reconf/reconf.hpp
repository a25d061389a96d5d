#pragma once

#include "bench.hpp"
#include "dsr_kernel.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "instance.hpp"
#include "io.hpp"
#include "isr_kernel.hpp"
#include "kernel_report.hpp"
#include "projection.hpp"
#include "quasi_wideness.hpp"
#include "report.hpp"
#include "solver.hpp"
