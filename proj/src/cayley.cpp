#include "caloops/cayley.hpp"

#include <fstream>
#include <sstream>

namespace caloops {

namespace {
// Division tables double the footprint, so only materialize them where the
// quadratic scans actually run. 1500^2 entries is 9 MB per table.
constexpr int32_t kDivTableMaxOrder = 1500;
}  // namespace

CayleyLoop build_loop(int32_t n, const std::vector<int32_t>& table,
                      int64_t order_cap) {
    if (n < 1) throw Error("build_loop: order must be at least 1");
    if (n > order_cap)
        throw Error("build_loop: order cap exceeded (" + std::to_string(n) +
                    " > " + std::to_string(order_cap) + ")");
    if (static_cast<int64_t>(table.size()) != static_cast<int64_t>(n) * n)
        throw Error("build_loop: table has " + std::to_string(table.size()) +
                    " entries, expected " + std::to_string(int64_t(n) * n));

    std::vector<char> seen(n);
    for (int32_t r = 0; r < n; ++r) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int32_t c = 0; c < n; ++c) {
            int32_t v = table[r * n + c];
            if (v < 0 || v >= n)
                throw Error("build_loop: not a Latin square: entry " +
                            std::to_string(v) + " out of range in row " +
                            std::to_string(r));
            if (seen[v])
                throw Error(
                    "build_loop: not a Latin square: row " + std::to_string(r) +
                    " repeats entry " + std::to_string(v));
            seen[v] = 1;
        }
    }
    for (int32_t c = 0; c < n; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int32_t r = 0; r < n; ++r) {
            int32_t v = table[r * n + c];
            if (seen[v])
                throw Error("build_loop: not a Latin square: column " +
                            std::to_string(c) + " repeats entry " +
                            std::to_string(v));
            seen[v] = 1;
        }
    }
    for (int32_t j = 0; j < n; ++j)
        if (table[0 * n + j] != j || table[j * n + 0] != j)
            throw Error("build_loop: index 0 is not an identity");

    CayleyLoop q;
    q.n_ = n;
    q.t_ = table;
    if (n <= kDivTableMaxOrder) {
        q.ld_.resize(static_cast<size_t>(n) * n);
        q.rd_.resize(static_cast<size_t>(n) * n);
        for (int32_t a = 0; a < n; ++a)
            for (int32_t b = 0; b < n; ++b) {
                int32_t ab = table[a * n + b];
                q.ld_[a * n + ab] = b;  // a \ (a*b) = b
                q.rd_[b * n + ab] = a;  // (a*b) / b = a
            }
    }
    return q;
}

CayleyLoop parse_cayley(const std::string& text, int64_t order_cap) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int32_t n = -1;
    std::vector<int32_t> table;
    int32_t rows_read = 0;

    auto fail = [&](const std::string& msg) {
        throw Error("parse_cayley: line " + std::to_string(lineno) + ": " +
                    msg);
    };

    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line.substr(start));
        if (n < 0) {
            std::string kw;
            ls >> kw;
            if (kw != "order") fail("expected 'order n' header");
            int64_t v;
            if (!(ls >> v) || v < 1) fail("bad order value");
            std::string extra;
            if (ls >> extra) fail("trailing tokens after order");
            if (v > order_cap) fail("order cap exceeded");
            n = static_cast<int32_t>(v);
            table.reserve(static_cast<size_t>(n) * n);
            continue;
        }
        if (rows_read == n) fail("extra row after table is complete");
        int64_t v;
        int32_t count = 0;
        while (ls >> v) {
            if (count == n) fail("row has more than " + std::to_string(n) +
                                 " entries");
            table.push_back(static_cast<int32_t>(v));
            ++count;
        }
        if (!ls.eof()) fail("non-numeric token in table row");
        if (count != n)
            fail("row has " + std::to_string(count) + " entries, expected " +
                 std::to_string(n));
        ++rows_read;
    }
    if (n < 0) throw Error("parse_cayley: missing 'order n' header");
    if (rows_read != n)
        throw Error("parse_cayley: got " + std::to_string(rows_read) +
                    " rows, expected " + std::to_string(n));
    return build_loop(n, table, order_cap);
}

std::string format_cayley(const CayleyLoop& q) {
    std::ostringstream out;
    int32_t n = q.order();
    out << "order " << n << "\n";
    for (int32_t r = 0; r < n; ++r) {
        const int32_t* row = q.row(r);
        for (int32_t c = 0; c < n; ++c) {
            if (c) out << ' ';
            out << row[c];
        }
        out << "\n";
    }
    return out.str();
}

CayleyLoop load_cayley_file(const std::string& path, int64_t order_cap) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_cayley(ss.str(), order_cap);
}

void save_cayley_file(const CayleyLoop& q, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << format_cayley(q);
}

}  // namespace caloops
