#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gbc/bigint.hpp"

namespace gbc {

// Upper unitriangular m x m matrix over F_p: ones on the diagonal, zeros
// below. U_m(F_p) is nilpotent of class m-1 and has p^(m(m-1)/2) elements.
class UnitriangularMatrix {
public:
    UnitriangularMatrix() = default;
    UnitriangularMatrix(int m, std::uint32_t p);  // identity

    static UnitriangularMatrix identity(int m, std::uint32_t p);
    // I + c*E_ij, requires i < j.
    static UnitriangularMatrix elementary(int m, std::uint32_t p, int i, int j,
                                          std::uint32_t c);

    int size() const { return m_; }
    std::uint32_t modulus() const { return p_; }

    std::uint32_t at(int i, int j) const { return a_[static_cast<std::size_t>(i) * m_ + j]; }
    void set(int i, int j, std::uint32_t v);

    UnitriangularMatrix mul(const UnitriangularMatrix& other) const;
    UnitriangularMatrix inv() const;
    UnitriangularMatrix pow(const BigInt& e) const;

    bool is_identity() const;
    bool operator==(const UnitriangularMatrix& other) const = default;

    std::string to_string() const;

private:
    int m_ = 0;
    std::uint32_t p_ = 0;
    std::vector<std::uint32_t> a_;
};

// All elements of U_m(F_p) in odometer order over the strict upper entries.
// Throws SizeLimitError when the group order exceeds `limit`.
std::vector<UnitriangularMatrix> unitriangular_elements(int m, std::uint32_t p,
                                                        std::uint64_t limit = 1000000);

std::uint64_t unitriangular_order(int m, std::uint32_t p);

}  // namespace gbc
