#include "lspace/verdict.hpp"

namespace lspace {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::LSpace:
        return "LSPACE";
    case Verdict::NotLSpace:
        return "NOT_LSPACE";
    case Verdict::NotQHS:
        return "NOT_QHS";
    case Verdict::BoundaryCase:
        return "BOUNDARY";
    case Verdict::Unknown:
        return "UNKNOWN";
    }
    return "?";
}

} // namespace lspace
