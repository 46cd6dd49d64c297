#include "gbc/unitriangular.hpp"

#include <sstream>

#include "gbc/errors.hpp"

namespace gbc {

UnitriangularMatrix::UnitriangularMatrix(int m, std::uint32_t p) : m_(m), p_(p) {
    if (m < 1 || p < 2) throw MalformedInput("unitriangular matrix needs m >= 1, p >= 2");
    a_.assign(static_cast<std::size_t>(m) * m, 0);
    for (int i = 0; i < m; ++i) a_[static_cast<std::size_t>(i) * m + i] = 1;
}

UnitriangularMatrix UnitriangularMatrix::identity(int m, std::uint32_t p) {
    return UnitriangularMatrix(m, p);
}

UnitriangularMatrix UnitriangularMatrix::elementary(int m, std::uint32_t p, int i,
                                                    int j, std::uint32_t c) {
    UnitriangularMatrix out(m, p);
    out.set(i, j, c % p);
    return out;
}

void UnitriangularMatrix::set(int i, int j, std::uint32_t v) {
    if (i >= j) throw MalformedInput("only strict upper entries are settable");
    a_[static_cast<std::size_t>(i) * m_ + j] = v % p_;
}

UnitriangularMatrix UnitriangularMatrix::mul(const UnitriangularMatrix& other) const {
    if (m_ != other.m_ || p_ != other.p_)
        throw MalformedInput("matrix shape/modulus mismatch");
    UnitriangularMatrix out(m_, p_);
    for (int i = 0; i < m_; ++i) {
        for (int j = i; j < m_; ++j) {
            std::uint64_t acc = 0;
            for (int k = i; k <= j; ++k)
                acc += static_cast<std::uint64_t>(at(i, k)) * other.at(k, j);
            out.a_[static_cast<std::size_t>(i) * m_ + j] =
                static_cast<std::uint32_t>(acc % p_);
        }
    }
    return out;
}

UnitriangularMatrix UnitriangularMatrix::inv() const {
    // A = I + N with N strictly upper, so A^-1 = I - N + N^2 - ... (m-1 terms).
    UnitriangularMatrix n_part = *this;
    for (int i = 0; i < m_; ++i) n_part.a_[static_cast<std::size_t>(i) * m_ + i] = 0;

    UnitriangularMatrix out(m_, p_);
    std::vector<std::uint32_t> cur(n_part.a_);  // running N^k
    int sign = -1;
    for (int k = 1; k < m_; ++k) {
        for (int i = 0; i < m_; ++i)
            for (int j = i + 1; j < m_; ++j) {
                std::uint64_t v = cur[static_cast<std::size_t>(i) * m_ + j] % p_;
                if (sign < 0) v = (p_ - v % p_) % p_;
                out.a_[static_cast<std::size_t>(i) * m_ + j] =
                    static_cast<std::uint32_t>(
                        (out.a_[static_cast<std::size_t>(i) * m_ + j] + v) % p_);
            }
        // cur <- cur * N
        std::vector<std::uint32_t> next(cur.size(), 0);
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < m_; ++j) {
                std::uint64_t acc = 0;
                for (int t = 0; t < m_; ++t)
                    acc += static_cast<std::uint64_t>(cur[static_cast<std::size_t>(i) * m_ + t]) *
                           n_part.a_[static_cast<std::size_t>(t) * m_ + j];
                next[static_cast<std::size_t>(i) * m_ + j] =
                    static_cast<std::uint32_t>(acc % p_);
            }
        cur = std::move(next);
        sign = -sign;
    }
    return out;
}

UnitriangularMatrix UnitriangularMatrix::pow(const BigInt& e) const {
    if (e < 0) return inv().pow(-e);
    UnitriangularMatrix result(m_, p_);
    UnitriangularMatrix base = *this;
    BigInt k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = result.mul(base);
        k >>= 1;
        if (k > 0) base = base.mul(base);
    }
    return result;
}

bool UnitriangularMatrix::is_identity() const {
    for (int i = 0; i < m_; ++i)
        for (int j = i + 1; j < m_; ++j)
            if (at(i, j) != 0) return false;
    return true;
}

std::string UnitriangularMatrix::to_string() const {
    std::ostringstream out;
    for (int i = 0; i < m_; ++i) {
        for (int j = 0; j < m_; ++j) {
            if (j) out << " ";
            out << at(i, j);
        }
        out << "\n";
    }
    return out.str();
}

std::uint64_t unitriangular_order(int m, std::uint32_t p) {
    std::uint64_t order = 1;
    for (int k = 0; k < m * (m - 1) / 2; ++k) {
        if (order > UINT64_MAX / p) throw SizeLimitError("group order overflows");
        order *= p;
    }
    return order;
}

std::vector<UnitriangularMatrix> unitriangular_elements(int m, std::uint32_t p,
                                                        std::uint64_t limit) {
    std::uint64_t order = unitriangular_order(m, p);
    if (order > limit) throw SizeLimitError("group enumeration exceeds limit");
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) slots.emplace_back(i, j);

    std::vector<UnitriangularMatrix> out;
    out.reserve(order);
    std::vector<std::uint32_t> odo(slots.size(), 0);
    for (std::uint64_t idx = 0; idx < order; ++idx) {
        UnitriangularMatrix mat(m, p);
        for (std::size_t s = 0; s < slots.size(); ++s)
            mat.set(slots[s].first, slots[s].second, odo[s]);
        out.push_back(std::move(mat));
        for (std::size_t s = 0; s < slots.size(); ++s) {
            if (++odo[s] < p) break;
            odo[s] = 0;
        }
    }
    return out;
}

}  // namespace gbc
