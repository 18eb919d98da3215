#include "ptl/common.hpp"

#include <cstdlib>
#include <sstream>

namespace ptl {

int size_cap(int fallback) {
    if (const char* env = std::getenv("PERMUTREE_LAB_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return fallback;
}

void check_cap(int value, int cap, const std::string& what) {
    if (value > cap)
        throw CapError(what + " size " + std::to_string(value) + " exceeds cap " +
                       std::to_string(cap));
}

std::string format_word(const Word& w) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

Word parse_int_list(const std::string& text) {
    Word out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw ValidationError("not an integer: '" + item + "'");
        }
        if (pos != item.size()) throw ValidationError("not an integer: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

}  // namespace ptl
