// Copyright 2026 The stabkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stabkit/pauli.hpp"

#include <bit>

#include "stabkit/error.hpp"

namespace stabkit {

PauliString::PauliString(size_t n)
    : n_(n), x_(words_for_bits(n), 0), z_(words_for_bits(n), 0) {}

PauliString PauliString::parse(std::string_view text) {
    size_t pos = 0;
    bool sign = false;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        sign = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size()) {
        throw ParseError(0, "empty Pauli string");
    }
    PauliString p(text.size() - pos);
    p.sign_ = sign;
    for (size_t q = 0; pos < text.size(); ++pos, ++q) {
        switch (text[pos]) {
            case 'I':
                break;
            case 'X':
                p.set_pauli(q, true, false);
                break;
            case 'Y':
                p.set_pauli(q, true, true);
                break;
            case 'Z':
                p.set_pauli(q, false, true);
                break;
            default:
                throw ParseError(0, "invalid Pauli character '" + std::string(1, text[pos]) +
                                        "' at position " + std::to_string(pos + 1));
        }
    }
    return p;
}

PauliString PauliString::z_at(size_t n, size_t q) {
    PauliString p(n);
    p.set_pauli(q, false, true);
    return p;
}

PauliString PauliString::x_at(size_t n, size_t q) {
    PauliString p(n);
    p.set_pauli(q, true, false);
    return p;
}

void PauliString::check_qubit(size_t q) const {
    if (q >= n_) {
        throw DimensionError("qubit index " + std::to_string(q) + " out of range for " +
                             std::to_string(n_) + " qubits");
    }
}

void PauliString::set_pauli(size_t q, bool x, bool z) {
    check_qubit(q);
    uint64_t m = uint64_t{1} << (q & 63);
    x_[q >> 6] = (x_[q >> 6] & ~m) | (x ? m : 0);
    z_[q >> 6] = (z_[q >> 6] & ~m) | (z ? m : 0);
}

char PauliString::pauli_at(size_t q) const {
    check_qubit(q);
    return "IXZY"[x_bit(q) + 2 * z_bit(q)];
}

std::string PauliString::str() const {
    std::string out;
    out.reserve(n_ + 1);
    out.push_back(sign_ ? '-' : '+');
    for (size_t q = 0; q < n_; ++q) {
        out.push_back(pauli_at(q));
    }
    return out;
}

size_t PauliString::weight() const {
    size_t w = 0;
    for (size_t i = 0; i < x_.size(); ++i) {
        w += std::popcount(x_[i] | z_[i]);
    }
    return w;
}

bool PauliString::is_identity() const {
    for (size_t i = 0; i < x_.size(); ++i) {
        if (x_[i] | z_[i]) {
            return false;
        }
    }
    return true;
}

bool PauliString::commutes_with(const PauliString &other) const {
    if (other.n_ != n_) {
        throw DimensionError("Pauli length mismatch: " + std::to_string(n_) + " vs " +
                             std::to_string(other.n_));
    }
    uint64_t parity = 0;
    for (size_t i = 0; i < x_.size(); ++i) {
        parity ^= std::popcount((x_[i] & other.z_[i]) ^ (other.x_[i] & z_[i])) & 1;
    }
    return parity == 0;
}

bool PauliString::qubitwise_commutes_with(const PauliString &other) const {
    if (other.n_ != n_) {
        throw DimensionError("Pauli length mismatch: " + std::to_string(n_) + " vs " +
                             std::to_string(other.n_));
    }
    for (size_t i = 0; i < x_.size(); ++i) {
        if ((x_[i] & other.z_[i]) ^ (other.x_[i] & z_[i])) {
            return false;
        }
    }
    return true;
}

bool PauliString::same_axis(const PauliString &other) const {
    return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
}

void PauliString::conj_h(size_t q) {
    check_qubit(q);
    size_t w = q >> 6;
    uint64_t m = uint64_t{1} << (q & 63);
    uint64_t xb = x_[w] & m;
    uint64_t zb = z_[w] & m;
    sign_ ^= (xb && zb);
    uint64_t diff = xb ^ zb;
    x_[w] ^= diff;
    z_[w] ^= diff;
}

void PauliString::conj_s(size_t q) {
    check_qubit(q);
    size_t w = q >> 6;
    uint64_t m = uint64_t{1} << (q & 63);
    uint64_t xb = x_[w] & m;
    sign_ ^= (xb && (z_[w] & m));
    z_[w] ^= xb;
}

void PauliString::conj_sdg(size_t q) {
    check_qubit(q);
    size_t w = q >> 6;
    uint64_t m = uint64_t{1} << (q & 63);
    uint64_t xb = x_[w] & m;
    sign_ ^= (xb && !(z_[w] & m));
    z_[w] ^= xb;
}

void PauliString::conj_cx(size_t c, size_t t) {
    check_qubit(c);
    check_qubit(t);
    bool xc = x_bit(c), zc = z_bit(c), xt = x_bit(t), zt = z_bit(t);
    sign_ ^= xc && zt && (xt == zc);
    if (xc) {
        x_[t >> 6] ^= uint64_t{1} << (t & 63);
    }
    if (zt) {
        z_[c >> 6] ^= uint64_t{1} << (c & 63);
    }
}

int64_t product_g_sum(const uint64_t *xa, const uint64_t *za, const uint64_t *xb,
                      const uint64_t *zb, size_t nwords) {
    // Positions where the single-qubit product a_j * b_j carries a +i phase
    // are (X,Y), (Y,Z), (Z,X); the -i positions are (X,Z), (Y,X), (Z,Y).
    int64_t total = 0;
    for (size_t i = 0; i < nwords; ++i) {
        uint64_t a_x = xa[i], a_z = za[i], b_x = xb[i], b_z = zb[i];
        uint64_t anti = (a_x & b_z) ^ (b_x & a_z);
        uint64_t plus = (a_x & ~a_z & b_x & b_z)    // X * Y
                        | (a_x & a_z & ~b_x & b_z)  // Y * Z
                        | (~a_x & a_z & b_x & ~b_z);  // Z * X
        uint64_t minus = anti & ~plus;
        total += std::popcount(plus);
        total -= std::popcount(minus);
    }
    return total;
}

int64_t product_g_sum(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError("Pauli length mismatch in product");
    }
    return product_g_sum(a.x_words().data(), a.z_words().data(), b.x_words().data(),
                         b.z_words().data(), a.x_words().size());
}

BitVec commutation_vector(const PauliString &p, std::span<const PauliString> rows) {
    BitVec out(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        const PauliString &row = rows[i];
        if (row.num_qubits() != p.num_qubits()) {
            throw DimensionError("row " + std::to_string(i) + " has length " +
                                 std::to_string(row.num_qubits()) + ", expected " +
                                 std::to_string(p.num_qubits()));
        }
        uint64_t dot = 0;
        const auto &xp = p.x_words();
        const auto &zp = p.z_words();
        const auto &xs = row.x_words();
        const auto &zs = row.z_words();
        for (size_t w = 0; w < xp.size(); ++w) {
            dot ^= (std::popcount(xp[w] & zs[w]) + std::popcount(zp[w] & xs[w])) & 1;
        }
        if (dot) {
            out.set(i, true);
        }
    }
    return out;
}

void rowsum_plus_i(PauliString &target, const PauliString &pushed) {
    int64_t sum = 2 * target.sign() + 2 * pushed.sign() + product_g_sum(pushed, target) + 1;
    int64_t mod = ((sum % 4) + 4) % 4;
    if (mod != 0 && mod != 2) {
        throw InvariantError("rowsum+i on commuting rows produced a non-Hermitian product");
    }
    target.set_sign(mod == 2);
    auto &tx = target.x_words();
    auto &tz = target.z_words();
    const auto &px = pushed.x_words();
    const auto &pz = pushed.z_words();
    for (size_t w = 0; w < tx.size(); ++w) {
        tx[w] ^= px[w];
        tz[w] ^= pz[w];
    }
}

}  // namespace stabkit
