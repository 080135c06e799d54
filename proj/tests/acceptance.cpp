#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "bfn/verification.hpp"

// Acceptance gate: runs the verification criteria and prints one PASS/FAIL
// line per criterion with the measured quantities and the tolerances they
// were held to. Exit status is 0 iff every executed criterion passed.
//
//   acceptance                 run all criteria
//   acceptance --criterion N   run a single criterion

int main(int argc, char** argv) {
    std::vector<int> ids = bfn::criterion_ids();
    if (argc == 3 && std::string(argv[1]) == "--criterion") {
        char* end = nullptr;
        const long id = std::strtol(argv[2], &end, 10);
        if (end == argv[2] || *end != '\0' || id < 1 ||
            id > static_cast<long>(ids.size())) {
            std::fprintf(stderr, "acceptance: unknown criterion '%s'\n", argv[2]);
            return 1;
        }
        ids = {static_cast<int>(id)};
    } else if (argc != 1) {
        std::fprintf(stderr, "usage: acceptance [--criterion N]\n");
        return 1;
    }

    bool all_pass = true;
    for (int id : ids) {
        const bfn::CriterionResult r = bfn::run_criterion(id);
        all_pass = all_pass && r.pass;
        std::printf("criterion %d %s (%s)\n", r.id, r.pass ? "PASS" : "FAIL",
                    r.name.c_str());
        for (const auto& [key, value] : r.measured)
            std::printf("    measured  %s = %.17g\n", key.c_str(), value);
        for (const auto& [key, value] : r.tolerances)
            std::printf("    tolerance %s = %.17g\n", key.c_str(), value);
        if (!r.note.empty()) std::printf("    note: %s\n", r.note.c_str());
    }
    return all_pass ? 0 : 1;
}
