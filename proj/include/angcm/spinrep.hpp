#pragma once

#include <map>
#include <string>
#include <vector>

#include "angcm/spectra.hpp"

namespace angcm {

// Young diagram with weakly decreasing positive rows. Canonical form for
// SU(s) strips the columns of height s; diagrams with more than s rows are
// zero and never stored.
class YoungDiagram {
public:
    YoungDiagram() = default;  // the trivial representation []
    explicit YoungDiagram(std::vector<int> rows);

    const std::vector<int>& rows() const { return rows_; }
    int row_count() const { return static_cast<int>(rows_.size()); }
    long boxes() const;

    // "[3,1,1]"; "[]" for the trivial diagram.
    std::string str() const;
    static YoungDiagram parse(std::string_view text);

    friend bool operator==(const YoungDiagram& a, const YoungDiagram& b) { return a.rows_ == b.rows_; }
    friend bool operator<(const YoungDiagram& a, const YoungDiagram& b);

private:
    std::vector<int> rows_;
};

// Weyl dimension formula for SU(s); diagram must have at most s rows.
long long irrep_dimension(int s, const YoungDiagram& d);

// Integer-multiplicity combination of SU(s) irreps. Multiplicities may go
// negative transiently under subtraction; the model-level outputs must not.
class VirtualCharacter {
public:
    VirtualCharacter() = default;
    static VirtualCharacter single(const YoungDiagram& d, long long mult = 1);

    const std::map<YoungDiagram, long long>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    bool all_nonnegative() const;
    long long multiplicity(const YoungDiagram& d) const;
    // Sum of multiplicity * irrep dimension.
    long long dimension(int s) const;

    void add(const YoungDiagram& d, long long mult);
    VirtualCharacter& operator+=(const VirtualCharacter& o);
    VirtualCharacter& operator-=(const VirtualCharacter& o);
    friend VirtualCharacter operator+(VirtualCharacter a, const VirtualCharacter& b) { return a += b; }
    friend VirtualCharacter operator-(VirtualCharacter a, const VirtualCharacter& b) { return a -= b; }
    friend bool operator==(const VirtualCharacter& a, const VirtualCharacter& b) {
        return a.entries_ == b.entries_;
    }

    // "2*[3,1] + 1*[2,2]"; "0" when empty.
    std::string str() const;

private:
    std::map<YoungDiagram, long long> entries_;
};

// Tensor product with the l-box symmetric row [l] by the Pieri rule (add l
// boxes, no two in the same column), truncated to SU(s).
VirtualCharacter pieri_product(const VirtualCharacter& c, int l, int s);

// Spin content of one energy level of the full model: the product
// [c1] x [c2-c1] x ... x [n-cr] over the positions c1<...<cr of the
// nonvanishing k_i, fully decomposed.
VirtualCharacter level_content(int n, const MultiIndex& k, int s);

// S(m), S_Omega(m) = S(m)-S(m-2), or
// S~_Omega(m) = S(m)-S(m-1)-S(m-2)+S(m-3), per variant (Full / Angular /
// RelativeAngular). Throws NegativeMultiplicity if an angular output has a
// negative coefficient.
VirtualCharacter spin_content(ModelVariant v, int n, long m, int s);

}  // namespace angcm
