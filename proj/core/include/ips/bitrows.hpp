#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <span>
#include <vector>

namespace ips {

// Square 0/1 matrix stored as packed 64-bit rows. Row intersection and
// population counts are the inner loop of every search in this library.
class BitRows {
public:
    BitRows() = default;
    BitRows(std::size_t n)
        : n_(n), words_(n == 0 ? 0 : (n + 63) / 64), bits_(n_ * words_, 0) {}

    std::size_t size() const { return n_; }
    std::size_t words_per_row() const { return words_; }

    void set(std::size_t i, std::size_t j) {
        bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    }
    void clear(std::size_t i, std::size_t j) {
        bits_[i * words_ + j / 64] &= ~(std::uint64_t{1} << (j % 64));
    }
    bool test(std::size_t i, std::size_t j) const {
        return (bits_[i * words_ + j / 64] >> (j % 64)) & 1;
    }

    std::span<const std::uint64_t> row(std::size_t i) const {
        return {bits_.data() + i * words_, words_};
    }
    std::span<std::uint64_t> row(std::size_t i) {
        return {bits_.data() + i * words_, words_};
    }

    std::size_t row_popcount(std::size_t i) const {
        std::size_t s = 0;
        for (std::uint64_t w : row(i)) s += std::popcount(w);
        return s;
    }

    std::size_t and_popcount(std::size_t i, std::size_t j) const {
        const std::uint64_t* a = bits_.data() + i * words_;
        const std::uint64_t* b = bits_.data() + j * words_;
        std::size_t s = 0;
        for (std::size_t w = 0; w < words_; ++w) s += std::popcount(a[w] & b[w]);
        return s;
    }

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Single dynamic bit vector with the handful of set operations the clique
// and candidate bookkeeping needs.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void clear(std::size_t i) { w_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1; }

    void set_all() {
        for (auto& w : w_) w = ~std::uint64_t{0};
        trim();
    }

    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    std::size_t count() const {
        std::size_t s = 0;
        for (auto w : w_) s += std::popcount(w);
        return s;
    }

    void and_with(std::span<const std::uint64_t> row) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= row[i];
    }
    void and_with(const BitVec& o) { and_with(o.words()); }

    std::span<const std::uint64_t> words() const { return w_; }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                unsigned b = std::countr_zero(w);
                f(i * 64 + b);
                w &= w - 1;
            }
        }
    }

private:
    void trim() {
        if (n_ % 64 && !w_.empty())
            w_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace ips
