#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "placard/geometry.hpp"

namespace placard {

/// Word-packed occupancy bitmap over the pixels of a chart.
///
/// The occupancy of pixel (x, y) is the bit at position ((y * width) + x) mod
/// wordBits of the word at index ((y * width) + x) / wordBits. Bits within a
/// word are ordered most-significant-first: pixel offset k maps to bit
/// (wordBits - 1 - k), so the mask selecting the first pixel of a 4-bit word
/// is 1000 in binary. Row lookups and updates touch whole words where the
/// queried pixel range covers them completely and AND/OR-mask the partially
/// covered edge words, so their cost depends on the range length only.
///
/// Out-of-bounds writes are clipped silently; out-of-bounds lookups report
/// unoccupied. Single writer; concurrent reads are safe between mutations.
class OccupancyBitmap {
public:
    /// wordBits must be one of 4, 8, 16, 32, 64 (4 exists for unit-test
    /// parity with small worked examples).
    OccupancyBitmap(int width, int height, int wordBits = 64);

    int width() const { return width_; }
    int height() const { return height_; }
    int wordBits() const { return wordBits_; }
    PixelRect bounds() const { return {0, 0, width_ - 1, height_ - 1}; }

    /// Raw storage. Each entry is a wordBits-wide value held in the low bits
    /// of a uint64_t; length is ceil(width*height / wordBits).
    const std::vector<std::uint64_t>& words() const { return words_; }

    void setPixel(int x, int y);
    bool testPixel(int x, int y) const;

    /// True iff any pixel in row y, columns [x0, x1], is occupied.
    bool rangeOccupied(int y, int x0, int x1) const;

    /// Marks every pixel in row y, columns [x0, x1], as occupied.
    void markRange(int y, int x0, int x1);

    /// True iff any pixel of r is occupied. Every row of r is evaluated.
    bool rectOccupied(const PixelRect& r) const;

    /// Marks r's top row, bottom row, and every minLabelHeight-th row in
    /// between (anchored at the top row). A later rectOccupied for any query
    /// rect of height >= minLabelHeight that intersects r is guaranteed to
    /// see at least one marked row. minLabelHeight = 1 fills the whole rect.
    void markRect(const PixelRect& r, int minLabelHeight);

    /// Number of occupied pixels.
    std::size_t countOccupied() const;

    /// Plain PGM (P2) dump, one sample per pixel, 0 = free, 1 = occupied.
    std::string toPgm() const;

private:
    int width_;
    int height_;
    int wordBits_;
    std::uint64_t fullMask_;  // low wordBits_ bits set
    std::vector<std::uint64_t> words_;

    // Mask of bit offsets [a, b] within one word (0 = most significant).
    std::uint64_t offsetMask(int a, int b) const;
};

}  // namespace placard
