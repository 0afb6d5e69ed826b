#include "friezelink/frieze.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace friezelink {

bool Frieze::defined_at(long long r, long long x) const {
    if (r < 0 || r >= row_count()) return false;
    long long xx = ((x % (2 * order)) + 2 * order) % (2 * order);
    return (xx - offsets[r]) % 2 == 0;
}

Int Frieze::at(long long r, long long x) const {
    if (r < 0 || r >= row_count()) throw error("frieze row out of range");
    long long period = 2 * order;
    long long xx = ((x % period) + period) % period;
    long long d = xx - offsets[r];
    if (((d % 2) + 2) % 2 != 0) throw error("no frieze entry at this position");
    long long m = ((d / 2) % order + order) % order;
    return rows[r][static_cast<size_t>(m)];
}

Frieze frieze_from_word(const LRWord& w) {
    if (!is_valid_word(w)) throw error("LR word may only contain L and R: " + w);
    const long long k = static_cast<long long>(w.size());
    const long long R = k + 1;  // interior rows
    const long long N = k + 4;  // period
    const long long rows_total = R + 2;

    // Zigzag seed positions, one per interior row; L steps left, R right.
    std::vector<long long> zig(static_cast<size_t>(R));
    long long z = k + 1 + (k % 2); // keeps row-1 entries on odd x
    zig[0] = z;
    for (long long r = 1; r < R; ++r) {
        z += (w[static_cast<size_t>(r - 1)] == 'R') ? 1 : -1;
        zig[static_cast<size_t>(r)] = z;
    }
    long long zmax = *std::max_element(zig.begin(), zig.end());
    const long long xmax = zmax + 4 * N + 4;

    // grid[r][x]; 0 marks an unset cell (all real entries are positive).
    std::vector<std::vector<Int>> grid(static_cast<size_t>(rows_total),
                                       std::vector<Int>(static_cast<size_t>(xmax + 1), Int(0)));
    for (long long x = 0; x <= xmax; ++x) {
        if (x % 2 == 0) grid[0][static_cast<size_t>(x)] = 1;
        if (((x - (R + 1)) % 2 + 2) % 2 == 0) grid[static_cast<size_t>(R + 1)][static_cast<size_t>(x)] = 1;
    }
    for (long long r = 1; r <= R; ++r) grid[static_cast<size_t>(r)][static_cast<size_t>(zig[static_cast<size_t>(r - 1)])] = 1;

    // Rightward diamond propagation: d = (1 + b c) / a with
    // a = (r, x-2), b = (r-1, x-1), c = (r+1, x-1).
    for (long long x = 0; x <= xmax; ++x) {
        for (long long r = 1; r <= R; ++r) {
            if ((x - r) % 2 != 0) continue;
            if (x <= zig[static_cast<size_t>(r - 1)]) continue;
            Int& cell = grid[static_cast<size_t>(r)][static_cast<size_t>(x)];
            if (cell != 0) continue;
            const Int& a = grid[static_cast<size_t>(r)][static_cast<size_t>(x - 2)];
            const Int& b = grid[static_cast<size_t>(r - 1)][static_cast<size_t>(x - 1)];
            const Int& c = grid[static_cast<size_t>(r + 1)][static_cast<size_t>(x - 1)];
            if (a == 0 || b == 0 || c == 0)
                throw frieze_integrity("propagation reached an unset cell");
            Int numer = 1 + b * c;
            if (numer % a != 0)
                throw frieze_integrity("diamond rule produced a non-integer entry");
            Int d = numer / a;
            if (d <= 0) throw frieze_integrity("diamond rule produced a non-positive entry");
            cell = d;
        }
    }

    // Periodicity with period N entries (2N in x) is a consequence of the
    // seed shape; verify before trusting the extracted window.
    const long long X0 = zmax + 1;
    for (long long r = 0; r < rows_total; ++r)
        for (long long x = X0; x + 2 * N <= xmax; ++x) {
            if ((x - r) % 2 != 0) continue;
            if (grid[static_cast<size_t>(r)][static_cast<size_t>(x)] !=
                grid[static_cast<size_t>(r)][static_cast<size_t>(x + 2 * N)])
                throw frieze_integrity("frieze is not periodic with the expected order");
        }

    Frieze f;
    f.order = N;
    f.rows.resize(static_cast<size_t>(rows_total));
    f.offsets.resize(static_cast<size_t>(rows_total));
    for (long long r = 0; r < rows_total; ++r) {
        long long first = X0 + (((r - X0) % 2) + 2) % 2;
        f.offsets[static_cast<size_t>(r)] = static_cast<int>(first - X0);
        auto& row = f.rows[static_cast<size_t>(r)];
        row.reserve(static_cast<size_t>(N));
        for (long long m = 0; m < N; ++m)
            row.push_back(grid[static_cast<size_t>(r)][static_cast<size_t>(first + 2 * m)]);
    }
    return f;
}

Frieze frieze_of(const Fraction& alpha) {
    if (!in_open_unit_interval(alpha))
        throw out_of_range("frieze_of needs alpha in (0,1), got " + alpha.str());
    return frieze_from_word(word_of(alpha));
}

MaxEntryInfo max_entry_with_neighbors(const Frieze& f) {
    MaxEntryInfo info;
    info.q = 0;
    for (long long r = 1; r + 1 < f.row_count(); ++r)
        for (long long m = 0; m < f.order; ++m) {
            const Int& v = f.rows[static_cast<size_t>(r)][static_cast<size_t>(m)];
            if (v > info.q) {
                info.q = v;
                info.row = r;
                info.x = f.offsets[static_cast<size_t>(r)] + 2 * m;
            }
        }
    info.around = {f.at(info.row - 1, info.x - 1), f.at(info.row - 1, info.x + 1),
                   f.at(info.row + 1, info.x - 1), f.at(info.row + 1, info.x + 1)};
    return info;
}

namespace {

// Cell map representation: (row, x mod 2N) -> value, for transform-and-compare.
using CellMap = std::map<std::pair<long long, long long>, Int>;

CellMap cells_of(const Frieze& f) {
    CellMap cm;
    for (long long r = 0; r < f.row_count(); ++r)
        for (long long m = 0; m < f.order; ++m)
            cm[{r, (f.offsets[static_cast<size_t>(r)] + 2 * m) % (2 * f.order)}] =
                f.rows[static_cast<size_t>(r)][static_cast<size_t>(m)];
    return cm;
}

CellMap transform(const CellMap& cm, long long rows_total, long long period2,
                  bool flip_v, bool flip_h, long long shift) {
    CellMap out;
    for (const auto& [key, v] : cm) {
        long long r = key.first, x = key.second;
        if (flip_v) r = rows_total - 1 - r;
        if (flip_h) x = ((-x) % period2 + period2) % period2;
        x = (x + shift) % period2;
        out[{r, x}] = v;
    }
    return out;
}

} // namespace

bool friezes_equivalent(const Frieze& a, const Frieze& b) {
    if (a.row_count() != b.row_count() || a.order != b.order) return false;
    const long long period2 = 2 * a.order;
    CellMap ca = cells_of(a), cb = cells_of(b);
    for (bool fv : {false, true})
        for (bool fh : {false, true})
            for (long long s = 0; s < period2; ++s)
                if (transform(cb, b.row_count(), period2, fv, fh, s) == ca) return true;
    return false;
}

namespace {

std::string markdown_render(const Frieze& f) {
    std::ostringstream os;
    long long cols = 2 * f.order;
    os << "|";
    for (long long c = 0; c < cols; ++c) os << " |";
    os << "\n|";
    for (long long c = 0; c < cols; ++c) os << "-|";
    os << "\n";
    for (long long r = 0; r < f.row_count(); ++r) {
        os << "|";
        for (long long x = 0; x < cols; ++x) {
            if (f.defined_at(r, x)) os << " " << f.at(r, x).str() << " |";
            else os << " |";
        }
        os << "\n";
    }
    return os.str();
}

std::string json_int(const Int& v) { return v.str(); }

std::string json_render(const Frieze& f) {
    std::ostringstream os;
    os << "{\"order\":" << f.order << ",\"rows\":[";
    for (size_t r = 0; r < f.rows.size(); ++r) {
        if (r) os << ",";
        os << "[";
        for (size_t m = 0; m < f.rows[r].size(); ++m) {
            if (m) os << ",";
            os << json_int(f.rows[r][m]);
        }
        os << "]";
    }
    os << "],\"offsets\":[";
    for (size_t r = 0; r < f.offsets.size(); ++r) {
        if (r) os << ",";
        os << f.offsets[r];
    }
    os << "]}";
    return os.str();
}

} // namespace

std::string render_frieze(const Frieze& f, FriezeFormat format, bool mark_max, bool color) {
    if (format == FriezeFormat::Json) return json_render(f);
    if (format == FriezeFormat::Markdown) return markdown_render(f);

    MaxEntryInfo mx;
    if (mark_max) mx = max_entry_with_neighbors(f);
    auto same_x = [&](long long x, long long y) {
        long long p = 2 * f.order;
        return ((x - y) % p + p) % p == 0;
    };
    auto is_max = [&](long long r, long long x) {
        return mark_max && r == mx.row && same_x(x, mx.x);
    };
    auto is_neighbor = [&](long long r, long long x) {
        if (!mark_max) return false;
        return (r == mx.row - 1 || r == mx.row + 1) &&
               (same_x(x, mx.x - 1) || same_x(x, mx.x + 1));
    };

    size_t width = 1;
    for (const auto& row : f.rows)
        for (const Int& v : row) width = std::max(width, v.str().size());
    const size_t unit = width + 1; // chars per x half-step
    std::ostringstream os;
    for (long long r = 0; r < f.row_count(); ++r) {
        std::string line;
        size_t visible = 0; // length ignoring ANSI escapes
        for (long long m = 0; m < f.order; ++m) {
            long long x = f.offsets[static_cast<size_t>(r)] + 2 * m;
            std::string s = f.rows[static_cast<size_t>(r)][static_cast<size_t>(m)].str();
            std::string pre, post;
            if (is_max(r, x)) { pre = "["; post = "]"; }
            else if (is_neighbor(r, x)) { pre = "("; post = ")"; }
            std::string plain = pre + s + post;
            if (color && !pre.empty())
                plain = (pre == "[" ? "\033[1;31m" : "\033[1;33m") + plain + "\033[0m";
            size_t col = static_cast<size_t>(x) * unit;
            while (visible < col) { line += ' '; ++visible; }
            line += plain;
            visible += pre.size() + s.size() + post.size();
        }
        os << line << "\n";
    }
    return os.str();
}

} // namespace friezelink
