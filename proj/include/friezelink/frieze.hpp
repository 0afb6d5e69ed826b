#pragma once

#include <array>
#include <vector>

#include "friezelink/lr_word.hpp"
#include "friezelink/rational.hpp"

namespace friezelink {

/// One fundamental period of a Conway-Coxeter frieze of zigzag type.
///
/// Entry m of row r sits at staggered x-position offsets[r] + 2m; rows 0 and
/// rows.size()-1 are the bounding 1-rows. A word of length k gives k+1
/// interior rows and period k+4 (confirmed against the worked L^2R^2L frieze,
/// which has period 9).
struct Frieze {
    long long order = 0;                 // period N, entries per row
    std::vector<std::vector<Int>> rows;  // (k+3) rows x N entries
    std::vector<int> offsets;            // x offset of entry 0 in each row, 0 or 1

    long long row_count() const { return static_cast<long long>(rows.size()); }
    long long interior_rows() const { return row_count() - 2; }
    /// Value at (row, x) for x taken mod 2N; throws if no entry sits at x.
    Int at(long long r, long long x) const;
    bool defined_at(long long r, long long x) const;
};

Frieze frieze_from_word(const LRWord& w);
Frieze frieze_of(const Fraction& alpha);

struct MaxEntryInfo {
    Int q;
    std::array<Int, 4> around; // diagonal neighbours: NW, NE, SW, SE
    long long row = 0;
    long long x = 0;
};

MaxEntryInfo max_entry_with_neighbors(const Frieze& f);

/// Equal up to horizontal translation, optionally composed with the vertical
/// reflection, the horizontal reflection, or both.
bool friezes_equivalent(const Frieze& a, const Frieze& b);

enum class FriezeFormat { Ascii, Markdown, Json };

std::string render_frieze(const Frieze& f, FriezeFormat format, bool mark_max = false,
                          bool color = false);

} // namespace friezelink
