#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ptl {

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an enumeration would exceed its configured size cap.
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Default caps can be overridden process-wide with PERMUTREE_LAB_CAP.
int size_cap(int fallback);
void check_cap(int value, int cap, const std::string& what);

using Word = std::vector<int>;

std::string format_word(const Word& w);
Word parse_int_list(const std::string& text);

}  // namespace ptl
