#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pmatch {

/// Symbol code. Sequences are integer-coded; alphabets larger than a byte
/// are routine (benchmark grids go up to several hundred symbols).
using Symbol = std::uint32_t;

/// An alphabet is just its size sigma; valid symbol codes are [0, sigma).
class Alphabet {
public:
    /// Largest supported alphabet. Two bytes per symbol is the widest
    /// encoding the on-disk format carries.
    static constexpr std::uint32_t kMaxSize = 1u << 16;

    explicit Alphabet(std::uint32_t size) : size_(size) {
        if (size == 0 || size > kMaxSize) {
            throw std::invalid_argument("alphabet size must be in [1, " +
                                        std::to_string(kMaxSize) + "], got " +
                                        std::to_string(size));
        }
    }

    std::uint32_t size() const noexcept { return size_; }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::uint32_t size_;
};

namespace detail {

inline void check_codes(std::span<const Symbol> symbols, const Alphabet& alphabet,
                        const char* what) {
    const Symbol sigma = alphabet.size();
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (symbols[i] >= sigma) {
            throw std::invalid_argument(std::string(what) + ": symbol code " +
                                        std::to_string(symbols[i]) + " at index " +
                                        std::to_string(i) + " exceeds alphabet size " +
                                        std::to_string(sigma));
        }
    }
}

}  // namespace detail

/// Immutable symbol sequence searched over. May be empty.
class Text {
public:
    Text(Alphabet alphabet, std::vector<Symbol> symbols)
        : alphabet_(alphabet), symbols_(std::move(symbols)) {
        detail::check_codes(symbols_, alphabet_, "Text");
    }

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
    std::span<const Symbol> view() const noexcept { return symbols_; }
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

private:
    Alphabet alphabet_;
    std::vector<Symbol> symbols_;
};

/// Immutable non-empty symbol sequence searched for.
class Pattern {
public:
    Pattern(Alphabet alphabet, std::vector<Symbol> symbols)
        : alphabet_(alphabet), symbols_(std::move(symbols)) {
        if (symbols_.empty()) {
            throw std::invalid_argument("Pattern: length must be at least 1");
        }
        detail::check_codes(symbols_, alphabet_, "Pattern");
    }

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
    std::span<const Symbol> view() const noexcept { return symbols_; }
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

private:
    Alphabet alphabet_;
    std::vector<Symbol> symbols_;
};

inline void require_same_alphabet(const Text& text, const Pattern& pattern) {
    if (!(text.alphabet() == pattern.alphabet())) {
        throw std::invalid_argument("text and pattern alphabets differ (" +
                                    std::to_string(text.alphabet().size()) + " vs " +
                                    std::to_string(pattern.alphabet().size()) + ")");
    }
}

}  // namespace pmatch
