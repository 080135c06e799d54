#pragma once

#include <string>
#include <utility>
#include <vector>

namespace bfn {

/// One verification criterion outcome: frozen closed-form targets compared
/// against the solvers at the stated tolerances.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::vector<std::pair<std::string, double>> measured;
    std::vector<std::pair<std::string, double>> tolerances;
    std::string note;
};

std::vector<int> criterion_ids();

/// Run one criterion by id (1-based); throws PreconditionError on unknown
/// ids. Exceptions inside a criterion are captured as a failing result with
/// the message in note.
CriterionResult run_criterion(int id);

/// Shift the frozen contraction constant that criterion 1 checks against.
/// Used by the verification-of-the-verifier test; zero restores the truth.
void set_oracle_tamper(double offset);

}  // namespace bfn
