#include "paramvex/solve_outcome.hpp"

namespace paramvex {

std::string_view to_string(SolveStatus status)
{
    switch (status) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unbounded: return "unbounded";
    case SolveStatus::InfNotAttained: return "not_attained";
    }
    return "unknown";
}

}  // namespace paramvex
