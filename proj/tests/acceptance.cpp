// Acceptance runner: executes the full built-in verification suite and
// prints one pass/fail line per group.  Exit status 0 iff everything passed.

#include <cstdio>

#include "riordan/selfcheck.hpp"

int main() {
    auto groups = riordan::selfcheck::run_groups();
    bool all = true;
    for (const auto& g : groups) {
        std::printf("[%s] %s (%zu checks)\n", g.pass ? "PASS" : "FAIL", g.group.c_str(),
                    g.checks);
        all = all && g.pass;
    }
    if (!all) {
        std::printf("--- failing checks ---\n");
        for (const auto& o : riordan::selfcheck::run_all())
            if (!o.pass) std::printf("FAIL %s (%s)\n", o.id.c_str(), o.note.c_str());
    }
    return all ? 0 : 1;
}
