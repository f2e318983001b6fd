#include "postlie/report.hpp"

namespace postlie {

std::string CheckReport::summary() const {
    std::string out;
    for (const auto& it : items) {
        out += it.passed ? "[pass] " : "[FAIL] ";
        out += it.name;
        if (!it.passed && !it.witness.empty()) {
            out += ": ";
            out += it.witness;
        }
        out += "\n";
    }
    return out;
}

}  // namespace postlie
