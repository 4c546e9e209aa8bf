#include "caloops/free_loop.hpp"

#include <sstream>
#include <vector>

namespace caloops {

FreeElement free_parse(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    if (parts.size() != 4)
        throw Error("free_parse: expected 4 comma-separated integers");
    FreeElement u;
    BigInt* coord[4] = {&u.a1, &u.a2, &u.a3, &u.a4};
    for (int i = 0; i < 4; ++i) {
        std::string digits = parts[i];
        if (digits.size() > 1 && digits[0] == '+') digits.erase(0, 1);
        try {
            *coord[i] = BigInt(digits);
        } catch (const std::exception&) {
            throw Error("free_parse: bad integer '" + parts[i] + "'");
        }
    }
    return u;
}

std::string free_format(const FreeElement& u) {
    std::ostringstream os;
    os << u.a1 << "," << u.a2 << "," << u.a3 << "," << u.a4;
    return os.str();
}

}  // namespace caloops
