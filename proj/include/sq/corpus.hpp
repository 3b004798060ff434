#pragma once

#include <string>
#include <vector>

#include "sq/chains.hpp"

namespace sq {

struct CorpusCase {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Built-in example quivers used across tests and the CLI corpus.
Quiver triangle_quiver();  // 1->2, 2->3, 1->3
Quiver square_quiver();    // 1->2, 1->3, 2->4, 3->4
Quiver a2_quiver();        // 1->2
Quiver a3_quiver();        // 1->2, 2->3
Quiver a1_quiver();

// Golden checks for the worked examples bundled with the tool.
std::vector<CorpusCase> run_corpus();

}  // namespace sq
