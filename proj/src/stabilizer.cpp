#include "qcap/stabilizer.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qcap {
namespace {

// 2n-bit word encoding of a Pauli: high half x bits, low half z bits.
uint64_t to_word(const PauliOperator& p, int n) {
    return (uint64_t{p.x_bits()} << n) | uint64_t{p.z_bits()};
}

PauliOperator from_word(uint64_t w, int n) {
    const uint64_t zmask = (n >= 32) ? 0xffffffffull : ((uint64_t{1} << n) - 1);
    return PauliOperator(n, static_cast<uint32_t>(w >> n), static_cast<uint32_t>(w & zmask));
}

// Symplectic partner: sp(a, b) == parity(partner(a) & b).
uint64_t partner(uint64_t w, int n) {
    const uint64_t zmask = (n >= 32) ? 0xffffffffull : ((uint64_t{1} << n) - 1);
    return ((w & zmask) << n) | (w >> n);
}

int symplectic_product(uint64_t a, uint64_t b, int n) {
    return std::popcount(partner(a, n) & b) & 1;
}

// Fully reduced GF(2) XOR basis; rows keep mutually distinct leading bits,
// stored in descending leading-bit order.
class XorBasis {
  public:
    // Reduces v against the basis; the result is the minimum element of the
    // coset v + span(rows).
    uint64_t reduce(uint64_t v) const {
        for (uint64_t row : rows_) {
            v = std::min(v, v ^ row);
        }
        return v;
    }

    // Returns false when v already lies in the span.
    bool insert(uint64_t v) {
        v = reduce(v);
        if (v == 0) return false;
        for (uint64_t& row : rows_) {
            row = std::min(row, row ^ v);
        }
        rows_.push_back(v);
        std::sort(rows_.begin(), rows_.end(), std::greater<>());
        return true;
    }

    bool contains(uint64_t v) const { return reduce(v) == 0; }
    size_t rank() const { return rows_.size(); }

  private:
    std::vector<uint64_t> rows_;
};

// Kernel basis of the GF(2) system {parity(rows[i] & v) == 0}, v over
// `cols` bits. Basis vectors are emitted in ascending free-column order.
std::vector<uint64_t> gf2_kernel(std::vector<uint64_t> rows, int cols) {
    std::vector<int> pivot_col;
    std::vector<uint64_t> reduced;
    for (uint64_t r : rows) {
        for (size_t i = 0; i < reduced.size(); ++i) {
            if ((r >> pivot_col[i]) & 1) r ^= reduced[i];
        }
        if (r == 0) continue;
        const int pc = std::bit_width(r) - 1;
        for (size_t i = 0; i < reduced.size(); ++i) {
            if ((reduced[i] >> pc) & 1) reduced[i] ^= r;
        }
        reduced.push_back(r);
        pivot_col.push_back(pc);
    }
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int pc : pivot_col) is_pivot[static_cast<size_t>(pc)] = true;

    std::vector<uint64_t> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        uint64_t v = uint64_t{1} << c;
        for (size_t i = 0; i < reduced.size(); ++i) {
            if ((reduced[i] >> c) & 1) v |= uint64_t{1} << pivot_col[i];
        }
        basis.push_back(v);
    }
    return basis;
}

}  // namespace

char to_char(LogicalClass c) {
    return "IXYZ"[static_cast<size_t>(c)];
}

uint32_t StabilizerCode::syndrome(const PauliOperator& e) const {
    uint32_t s = 0;
    for (size_t i = 0; i < generators.size(); ++i) {
        if (!e.commutes_with(generators[i])) s |= uint32_t{1} << i;
    }
    return s;
}

LogicalClass StabilizerCode::logical_class(const PauliOperator& e) const {
    const bool anti_z = !e.commutes_with(logical_z);
    const bool anti_x = !e.commutes_with(logical_x);
    if (anti_z) return anti_x ? LogicalClass::Y : LogicalClass::X;
    return anti_x ? LogicalClass::Z : LogicalClass::I;
}

std::optional<std::string> validate(const StabilizerCode& code) {
    if (code.n < 1 || code.n > kMaxQubits) {
        return "block size must be in [1, 32]";
    }
    if (code.generators.size() != static_cast<size_t>(code.n - 1)) {
        return "k=1 code on " + std::to_string(code.n) + " qubits needs " +
               std::to_string(code.n - 1) + " generators, got " +
               std::to_string(code.generators.size());
    }
    for (const auto& g : code.generators) {
        if (g.num_qubits() != code.n) return "generator size does not match block size";
    }
    if (code.logical_x.num_qubits() != code.n || code.logical_z.num_qubits() != code.n) {
        return "logical operator size does not match block size";
    }
    for (size_t i = 0; i < code.generators.size(); ++i) {
        for (size_t j = i + 1; j < code.generators.size(); ++j) {
            if (!code.generators[i].commutes_with(code.generators[j])) {
                return "generators " + std::to_string(i) + " and " + std::to_string(j) +
                       " anticommute";
            }
        }
    }
    XorBasis span;
    for (size_t i = 0; i < code.generators.size(); ++i) {
        if (!span.insert(to_word(code.generators[i], code.n))) {
            return "dependent generators (generator " + std::to_string(i) + ")";
        }
    }
    for (const auto& g : code.generators) {
        if (!code.logical_x.commutes_with(g)) return "logical_x anticommutes with a generator";
        if (!code.logical_z.commutes_with(g)) return "logical_z anticommutes with a generator";
    }
    if (code.logical_x.commutes_with(code.logical_z)) {
        return "logical_x and logical_z must anticommute";
    }
    if (span.contains(to_word(code.logical_x, code.n))) return "logical_x lies in the stabilizer group";
    if (span.contains(to_word(code.logical_z, code.n))) return "logical_z lies in the stabilizer group";
    return std::nullopt;
}

std::pair<PauliOperator, PauliOperator> derive_logicals(
    int n, std::span<const PauliOperator> generators) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("derive_logicals: block size must be in [1, 32]");
    }
    if (generators.size() != static_cast<size_t>(n - 1)) {
        throw std::invalid_argument("derive_logicals: need exactly n-1 generators");
    }
    XorBasis stab;
    std::vector<uint64_t> constraint_rows;
    for (size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].num_qubits() != n) {
            throw std::invalid_argument("derive_logicals: generator size mismatch");
        }
        for (size_t j = i + 1; j < generators.size(); ++j) {
            if (!generators[i].commutes_with(generators[j])) {
                throw std::invalid_argument("derive_logicals: generators anticommute");
            }
        }
        const uint64_t w = to_word(generators[i], n);
        if (!stab.insert(w)) {
            throw std::invalid_argument("derive_logicals: dependent generators");
        }
        constraint_rows.push_back(partner(w, n));
    }

    // Centralizer of the generators, i.e. the kernel of the symplectic
    // pairing. Dimension n+1; the quotient modulo the stabilizer span is the
    // 2-dimensional logical symplectic space.
    const auto centralizer = gf2_kernel(constraint_rows, 2 * n);
    XorBasis seen = stab;
    uint64_t u = 0, v = 0;
    for (uint64_t b : centralizer) {
        if (!seen.insert(b)) continue;
        if (u == 0) {
            u = b;
        } else {
            v = b;
            break;
        }
    }
    if (u == 0 || v == 0) {
        throw std::invalid_argument("derive_logicals: centralizer has no logical pair");
    }
    // Distinct nonzero classes of the 2-dim quotient always anticommute.
    if (symplectic_product(u, v, n) != 1) {
        throw std::logic_error("derive_logicals: quotient representatives commute");
    }

    // Coset-minimal representative of each of the three nonzero classes;
    // with the (x << n) | z encoding the minimum clears x bits first, so a
    // class containing a pure-Z member reduces to it.
    uint64_t reps[3] = {stab.reduce(u), stab.reduce(v), stab.reduce(u ^ v)};
    std::sort(reps, reps + 3);
    const uint64_t zmask = (n >= 32) ? 0xffffffffull : ((uint64_t{1} << n) - 1);
    auto pure_z = [&](uint64_t w) { return (w >> n) == 0; };
    auto pure_x = [&](uint64_t w) { return (w & zmask) == 0; };

    int zi = -1, xi = -1;
    for (int i = 0; i < 3; ++i) {
        if (zi < 0 && pure_z(reps[i])) zi = i;
    }
    for (int i = 0; i < 3; ++i) {
        if (i != zi && xi < 0 && pure_x(reps[i])) xi = i;
    }
    if (zi < 0) zi = (xi == 0) ? 1 : 0;
    if (xi < 0) xi = (zi == 0) ? 1 : 0;
    return {from_word(reps[xi], n), from_word(reps[zi], n)};
}

int min_distance(const StabilizerCode& code, int max_qubits) {
    if (auto err = validate(code)) {
        throw std::invalid_argument("min_distance: " + *err);
    }
    if (code.n > max_qubits) {
        throw std::invalid_argument("min_distance: block too large for enumeration (n > " +
                                    std::to_string(max_qubits) + ")");
    }
    // Spans the full centralizer from generators + logicals; every element
    // selecting a logical factor is outside the stabilizer group.
    std::vector<uint64_t> basis;
    for (const auto& g : code.generators) basis.push_back(to_word(g, code.n));
    basis.push_back(to_word(code.logical_x, code.n));
    basis.push_back(to_word(code.logical_z, code.n));
    const size_t logical_bits = size_t{3} << (code.n - 1);  // top two selector bits
    const uint64_t zmask = (code.n >= 32) ? 0xffffffffull : ((uint64_t{1} << code.n) - 1);

    int best = code.n + 1;
    for (size_t mask = 1; mask < (size_t{2} << code.n); ++mask) {
        if ((mask & logical_bits) == 0) continue;
        uint64_t w = 0;
        for (size_t i = 0; i < basis.size(); ++i) {
            if ((mask >> i) & 1) w ^= basis[i];
        }
        const int wt = std::popcount((w >> code.n) | (w & zmask));
        best = std::min(best, wt);
    }
    return best;
}

StabilizerCode sample_stabilizer_code(int n, std::mt19937_64& rng) {
    if (n < 2 || n > 12) {
        throw std::invalid_argument("sample_stabilizer_code: n must be in [2, 12]");
    }
    const uint32_t mask = qubit_mask(n);
    std::vector<PauliOperator> gens;
    XorBasis span;
    size_t attempts = 0;
    while (gens.size() < static_cast<size_t>(n - 1)) {
        if (++attempts > 1000000) {
            throw std::logic_error("sample_stabilizer_code: sampling failed to converge");
        }
        const uint64_t draw = rng();
        const PauliOperator cand(n, static_cast<uint32_t>(draw) & mask,
                                 static_cast<uint32_t>(draw >> 32) & mask);
        bool ok = true;
        for (const auto& g : gens) {
            if (!cand.commutes_with(g)) { ok = false; break; }
        }
        if (!ok) continue;
        if (!span.insert(to_word(cand, n))) continue;
        gens.push_back(cand);
    }
    auto [lx, lz] = derive_logicals(n, gens);
    return StabilizerCode{n, std::move(gens), lx, lz};
}

StabilizerCode random_stabilizer_code(int n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    return sample_stabilizer_code(n, rng);
}

}  // namespace qcap
