#include "mbe/all_bases.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "mbe/cycle_space.hpp"
#include "mbe/errors.hpp"

namespace mbe {

namespace {

constexpr std::uint64_t kNoBound = std::numeric_limits<std::uint64_t>::max();

void check_rank(int r) {
    if (r < 1 || r > 62) {
        throw std::invalid_argument("rank must be between 1 and 62");
    }
}

std::uint64_t ones_of(int r) { return (std::uint64_t{1} << r) - 1; }

// Gauss-Jordan inverse of the packed r x r matrix; empty result if singular.
// Bit (r-1-k) of a row is column k (0-based), matching RVector's layout.
std::vector<std::uint64_t> packed_inverse(std::vector<std::uint64_t> work,
                                          int r) {
    std::vector<std::uint64_t> inv(r);
    for (int k = 0; k < r; ++k) inv[k] = std::uint64_t{1} << (r - 1 - k);
    for (int col = 0; col < r; ++col) {
        std::uint64_t colbit = std::uint64_t{1} << (r - 1 - col);
        int pivot = -1;
        for (int i = col; i < r; ++i) {
            if (work[i] & colbit) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) return {};
        std::swap(work[pivot], work[col]);
        std::swap(inv[pivot], inv[col]);
        for (int i = 0; i < r; ++i) {
            if (i != col && (work[i] & colbit)) {
                work[i] ^= work[col];
                inv[i] ^= inv[col];
            }
        }
    }
    return inv;
}

// Packed minors for deleting row k: bit (r-j) holds det of the minor with
// row k and column j removed (1-based j), read off column k of the inverse.
std::uint64_t minors_for_row(const std::vector<std::uint64_t>& inv, int k,
                             int r) {
    std::uint64_t m = 0;
    for (int jz = 0; jz < r; ++jz) {
        if ((inv[jz] >> (r - 1 - k)) & 1u) {
            m |= std::uint64_t{1} << (r - 1 - jz);
        }
    }
    return m;
}

bool member_of_exchange(std::uint64_t candidate, std::uint64_t minors) {
    return std::popcount(candidate & minors) & 1u;
}

} // namespace

RVector succ(RVector c, int r) {
    check_rank(r);
    if (c.bin == 0 || c.bin == ones_of(r)) return {0};
    return {c.bin + 1};
}

RVector succ_pow(RVector c, int r, int i) {
    check_rank(r);
    if (i < 0 || i > r) {
        throw std::invalid_argument("succ_pow: index out of range");
    }
    if (c.bin == 0) return {0}; // absorbing
    std::uint64_t add = std::uint64_t{1} << (r - i);
    if (c.bin + add > ones_of(r)) return {0}; // passes through all-ones
    return {c.bin + add};
}

bool RBasis::contains(RVector c) const {
    return std::binary_search(rows.begin(), rows.end(), c);
}

RBasis make_rbasis(std::vector<RVector> rows) {
    std::sort(rows.begin(), rows.end());
    return RBasis{std::move(rows)};
}

RBasis root_rbasis(int r) {
    check_rank(r);
    std::vector<RVector> rows;
    for (int i = r; i >= 1; --i) rows.push_back(rv_unit(r, i));
    return make_rbasis(std::move(rows));
}

int rbasis_det(const std::vector<RVector>& rows, int r) {
    check_rank(r);
    if (static_cast<int>(rows.size()) != r) {
        throw std::invalid_argument("rbasis_det: matrix is not square");
    }
    std::uint64_t pivot_of_bit[64] = {0};
    for (const auto& row : rows) {
        std::uint64_t x = row.bin;
        while (x != 0) {
            int b = static_cast<int>(std::bit_width(x)) - 1;
            if (pivot_of_bit[b] == 0) {
                pivot_of_bit[b] = x;
                break;
            }
            x ^= pivot_of_bit[b];
        }
        if (x == 0) return 0;
    }
    return 1;
}

std::optional<RBasis> rbasis_parent(const RBasis& b, int r) {
    check_rank(r);
    // y = min(B \ R): smallest non-unit row.
    int y_pos = -1;
    for (std::size_t k = 0; k < b.rows.size(); ++k) {
        if (!rv_is_unit(b.rows[k])) {
            y_pos = static_cast<int>(k);
            break;
        }
    }
    if (y_pos < 0) return std::nullopt; // B == R

    std::vector<std::uint64_t> packed;
    packed.reserve(b.rows.size());
    for (const auto& row : b.rows) packed.push_back(row.bin);
    std::vector<std::uint64_t> inv = packed_inverse(packed, r);
    if (inv.empty()) {
        throw std::invalid_argument("rbasis_parent: input is not a basis");
    }
    std::uint64_t minors = minors_for_row(inv, y_pos, r);
    if (minors == 0) {
        throw std::logic_error("rbasis_parent: no unit-vector exchange");
    }
    // Smallest replacement from R = lowest set bit of the minor mask.
    std::uint64_t z = minors & (~minors + 1);

    std::vector<RVector> rows;
    for (std::size_t k = 0; k < b.rows.size(); ++k) {
        if (static_cast<int>(k) != y_pos) rows.push_back(b.rows[k]);
    }
    rows.push_back({z});
    return make_rbasis(std::move(rows));
}

namespace {

struct NodeView {
    std::vector<std::uint64_t> packed;
    std::uint64_t min_not_root = kNoBound; // min(P \ R), sentinel if empty
    // (i, row position) of unit rows c*_i, ascending i.
    std::vector<std::pair<int, int>> unit_rows;
    std::vector<std::uint64_t> inv;
};

NodeView view_of(const RBasis& p, int r) {
    NodeView v;
    v.packed.reserve(p.rows.size());
    for (const auto& row : p.rows) v.packed.push_back(row.bin);
    for (std::size_t k = 0; k < p.rows.size(); ++k) {
        if (rv_is_unit(p.rows[k])) {
            int i = r - (static_cast<int>(std::bit_width(p.rows[k].bin)) - 1);
            v.unit_rows.emplace_back(i, static_cast<int>(k));
        } else if (p.rows[k].bin < v.min_not_root) {
            v.min_not_root = p.rows[k].bin;
        }
    }
    std::sort(v.unit_rows.begin(), v.unit_rows.end());
    v.inv = packed_inverse(v.packed, r);
    if (v.inv.empty()) {
        throw std::invalid_argument("reverse search: input is not a basis");
    }
    return v;
}

} // namespace

std::vector<RBasis> rbasis_children(const RBasis& p, int r) {
    check_rank(r);
    NodeView view = view_of(p, r);
    std::vector<RBasis> out;
    for (auto [i, pos] : view.unit_rows) {
        std::uint64_t m = minors_for_row(view.inv, pos, r);
        // Condition: every minor with column index above i vanishes.
        std::uint64_t low = (i == r) ? 0 : ((std::uint64_t{1} << (r - i)) - 1);
        if ((m & low) != 0) continue;
        std::uint64_t upsilon = p.rows[pos].bin;
        while (upsilon != 0 && upsilon < view.min_not_root) {
            if (!rv_is_unit({upsilon})) {
                std::vector<RVector> rows;
                for (std::size_t k = 0; k < p.rows.size(); ++k) {
                    if (static_cast<int>(k) != pos) rows.push_back(p.rows[k]);
                }
                rows.push_back({upsilon});
                out.push_back(make_rbasis(std::move(rows)));
            }
            RVector z = succ({upsilon}, r);
            upsilon = z.bin;
            if (z.bin != 0 && !member_of_exchange(z.bin, m)) {
                RVector z1 = succ_pow(z, r, i);
                upsilon = z1.bin;
                if (z1.bin != 0 && !member_of_exchange(z1.bin, m)) {
                    RVector z2 = succ_pow(z, r, i - 1);
                    upsilon = z2.bin;
                }
            }
        }
    }
    return out;
}

struct AllRBasesEnumerator::Frame {
    RBasis basis;
    int depth = 0;
    NodeView view;
    std::size_t row_idx = 0;   // index into view.unit_rows
    std::uint64_t minors = 0;  // mask for the active row
    std::uint64_t upsilon = 0; // walk position; 0 = start next row
    bool walking = false;
};

AllRBasesEnumerator::~AllRBasesEnumerator() = default;
AllRBasesEnumerator::AllRBasesEnumerator(AllRBasesEnumerator&&) noexcept =
    default;
AllRBasesEnumerator& AllRBasesEnumerator::operator=(
    AllRBasesEnumerator&&) noexcept = default;

AllRBasesEnumerator::AllRBasesEnumerator(int r,
                                         std::optional<std::uint64_t> limit)
    : r_(r), limit_(limit) {
    check_rank(r);
    Frame root;
    root.basis = root_rbasis(r);
    root.depth = 0;
    root.view = view_of(root.basis, r);
    out_.push_back(root.basis); // depth 0 is even: emit before children
    stack_.push_back(std::move(root));
}

bool AllRBasesEnumerator::step() {
    if (stack_.empty()) {
        done_ = true;
        return false;
    }
    Frame& f = stack_.back();
    for (;;) {
        if (!f.walking) {
            if (f.row_idx == f.view.unit_rows.size()) {
                bool emit = (f.depth % 2 == 1);
                RBasis finished = std::move(f.basis);
                stack_.pop_back();
                if (emit) {
                    out_.push_back(std::move(finished));
                    return true;
                }
                return false;
            }
            auto [i, pos] = f.view.unit_rows[f.row_idx];
            f.minors = minors_for_row(f.view.inv, pos, r_);
            ++det_probes_;
            std::uint64_t low =
                (i == r_) ? 0 : ((std::uint64_t{1} << (r_ - i)) - 1);
            if ((f.minors & low) != 0) {
                ++f.row_idx;
                continue;
            }
            f.upsilon = f.basis.rows[pos].bin;
            f.walking = true;
        }
        auto [i, pos] = f.view.unit_rows[f.row_idx];
        if (f.upsilon == 0 || f.upsilon >= f.view.min_not_root) {
            f.walking = false;
            ++f.row_idx;
            continue;
        }
        std::uint64_t candidate = f.upsilon;

        // Advance the walk before a possible descent so the frame resumes
        // correctly later.
        RVector z = succ({f.upsilon}, r_);
        f.upsilon = z.bin;
        ++det_probes_;
        if (z.bin != 0 && !member_of_exchange(z.bin, f.minors)) {
            RVector z1 = succ_pow(z, r_, i);
            f.upsilon = z1.bin;
            ++det_probes_;
            if (z1.bin != 0 && !member_of_exchange(z1.bin, f.minors)) {
                RVector z2 = succ_pow(z, r_, i - 1);
                f.upsilon = z2.bin;
            }
        }

        if (!rv_is_unit({candidate})) {
            Frame child;
            std::vector<RVector> rows;
            for (std::size_t k = 0; k < f.basis.rows.size(); ++k) {
                if (static_cast<int>(k) != pos) rows.push_back(f.basis.rows[k]);
            }
            rows.push_back({candidate});
            child.basis = make_rbasis(std::move(rows));
            child.depth = f.depth + 1;
            child.view = view_of(child.basis, r_);
            bool emit = (child.depth % 2 == 0);
            RBasis emitted = child.basis;
            stack_.push_back(std::move(child));
            if (emit) {
                out_.push_back(std::move(emitted));
                return true;
            }
            return false;
        }
    }
}

std::optional<RBasis> AllRBasesEnumerator::next() {
    if (limit_ && emitted_ >= *limit_) return std::nullopt;
    while (out_.empty() && !done_) step();
    if (out_.empty()) return std::nullopt;
    RBasis b = std::move(out_.front());
    out_.erase(out_.begin());
    ++emitted_;
    return b;
}

std::uint64_t rbasis_count(int r) {
    check_rank(r);
    unsigned __int128 prod = 1;
    std::uint64_t pow = std::uint64_t{1} << r;
    for (int i = 0; i < r; ++i) {
        prod *= pow - (std::uint64_t{1} << i);
    }
    unsigned __int128 fact = 1;
    for (int i = 2; i <= r; ++i) fact *= i;
    prod /= fact;
    if (prod > std::numeric_limits<std::uint64_t>::max()) {
        throw std::overflow_error("rbasis_count: result does not fit 64 bits");
    }
    return static_cast<std::uint64_t>(prod);
}

std::vector<BitVec> lift(const RBasis& b, const LiftContext& ctx) {
    const int r = static_cast<int>(ctx.anchor.size());
    std::vector<BitVec> out;
    out.reserve(b.rows.size());
    for (const auto& c : b.rows) {
        BitVec v(ctx.anchor.empty() ? 0 : ctx.anchor[0].size());
        for (int j = 1; j <= r; ++j) {
            if ((c.bin >> (r - j)) & 1u) v ^= ctx.anchor[j - 1];
        }
        out.push_back(std::move(v));
    }
    return out;
}

LiftContext cycle_anchor(const WeightedGraph& g) {
    if (!g.connected()) {
        throw DisconnectedGraphError("cycle_anchor: graph must be connected");
    }
    LiftContext ctx;
    ctx.anchor = fundamental_cycles(g);
    return ctx;
}

LiftContext cut_anchor(const WeightedGraph& g) {
    if (!g.connected()) {
        throw DisconnectedGraphError("cut_anchor: graph must be connected");
    }
    LiftContext ctx;
    for (int v = 0; v + 1 < g.vertex_count(); ++v) {
        std::vector<char> side(g.vertex_count(), 0);
        side[v] = 1;
        ctx.anchor.push_back(g.cut_edges(side));
    }
    return ctx;
}

} // namespace mbe
