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

#ifndef STABKIT_PAULI_HPP
#define STABKIT_PAULI_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stabkit/bitvec.hpp"

namespace stabkit {

/// A signed n-qubit Pauli operator in binary symplectic form: packed x and z
/// bit vectors plus one sign bit (0 for +1, 1 for -1). Qubit j is encoded as
/// I=(0,0), X=(1,0), Z=(0,1), Y=(1,1). Padding bits in the trailing word are
/// always zero.
class PauliString {
  public:
    PauliString() = default;

    /// The n-qubit identity (+I...I).
    explicit PauliString(size_t n);

    /// Parses "[+|-]?[IXYZ]+". The leftmost Pauli character is qubit 0.
    /// Throws ParseError naming the 1-based offending position.
    static PauliString parse(std::string_view text);

    /// Single-qubit Z (or X) at qubit q, identity elsewhere.
    static PauliString z_at(size_t n, size_t q);
    static PauliString x_at(size_t n, size_t q);

    size_t num_qubits() const { return n_; }

    bool sign() const { return sign_; }
    void set_sign(bool s) { sign_ = s; }
    void flip_sign() { sign_ = !sign_; }

    bool x_bit(size_t q) const { return (x_[q >> 6] >> (q & 63)) & 1; }
    bool z_bit(size_t q) const { return (z_[q >> 6] >> (q & 63)) & 1; }
    void set_pauli(size_t q, bool x, bool z);

    /// Pauli character at qubit q: 'I', 'X', 'Y' or 'Z'.
    char pauli_at(size_t q) const;

    /// Text form with an explicit leading sign, e.g. "+XZ", "-Y".
    std::string str() const;

    /// Number of non-identity positions. The sign is ignored.
    size_t weight() const;

    bool is_identity() const;

    /// Group-wise commutation: true iff the number of positions where the
    /// single-qubit operators anticommute is even. Computed as
    /// popcount((x1 & z2) ^ (x2 & z1)) mod 2 over packed words.
    bool commutes_with(const PauliString &other) const;

    /// Qubit-wise commutation: true iff the operators commute at every
    /// single position. Implies commutes_with.
    bool qubitwise_commutes_with(const PauliString &other) const;

    /// Equal (x, z) bits, ignoring the sign.
    bool same_axis(const PauliString &other) const;

    bool operator==(const PauliString &other) const = default;

    /// Conjugation by one Clifford generator, acting on this row in place.
    /// These implement the tableau update rules: conj_h swaps the q-th x/z
    /// bits and flips the sign when both are set; conj_s and conj_sdg are
    /// the phase gate and its inverse; conj_cx is CNOT with control c.
    void conj_h(size_t q);
    void conj_s(size_t q);
    void conj_sdg(size_t q);
    void conj_cx(size_t c, size_t t);

    const std::vector<uint64_t> &x_words() const { return x_; }
    const std::vector<uint64_t> &z_words() const { return z_; }
    std::vector<uint64_t> &x_words() { return x_; }
    std::vector<uint64_t> &z_words() { return z_; }

  private:
    void check_qubit(size_t q) const;

    size_t n_ = 0;
    bool sign_ = false;
    std::vector<uint64_t> x_;
    std::vector<uint64_t> z_;
};

/// Signed sum of the per-position i-exponents of the product a*b (left factor
/// a), taken over raw words. Each position contributes +1, 0 or -1; the total
/// mod 4, together with the operand signs, fixes the sign of the product.
int64_t product_g_sum(const uint64_t *xa, const uint64_t *za, const uint64_t *xb,
                      const uint64_t *zb, size_t nwords);

/// i-exponent sum of the product a*b over qubits (sign bits not included).
int64_t product_g_sum(const PauliString &a, const PauliString &b);

/// Bit i is set iff p anticommutes (group-wise) with rows[i]. Evaluated as a
/// packed-word matrix pass (x_p . z_row) + (z_p . x_row) mod 2 per row.
BitVec commutation_vector(const PauliString &p, std::span<const PauliString> rows);

/// Replaces target with the Hermitian product i * pushed * target, where
/// pushed (sign included) anticommutes with target. This is the transform a
/// quarter rotation applies to an anticommuting Pauli row as it is pushed
/// past it. Throws InvariantError if the product is not Hermitian, i.e. if
/// the operands actually commute.
void rowsum_plus_i(PauliString &target, const PauliString &pushed);

}  // namespace stabkit

#endif
