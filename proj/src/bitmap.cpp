#include "placard/bitmap.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace placard {

OccupancyBitmap::OccupancyBitmap(int width, int height, int wordBits)
    : width_(width), height_(height), wordBits_(wordBits) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("bitmap dimensions must be positive");
    if (wordBits != 4 && wordBits != 8 && wordBits != 16 && wordBits != 32 &&
        wordBits != 64)
        throw std::invalid_argument("wordBits must be one of 4, 8, 16, 32, 64");
    fullMask_ = wordBits == 64 ? ~std::uint64_t{0}
                               : ((std::uint64_t{1} << wordBits) - 1);
    std::int64_t bits = std::int64_t{width} * height;
    words_.assign(static_cast<std::size_t>((bits + wordBits - 1) / wordBits), 0);
}

std::uint64_t OccupancyBitmap::offsetMask(int a, int b) const {
    // Offsets count from the most significant bit, so offsets >= a are the
    // low (wordBits - a) bits of fullMask_.
    std::uint64_t from = fullMask_ >> a;
    std::uint64_t beyond = (b + 1 >= wordBits_) ? 0 : (fullMask_ >> (b + 1));
    return from & ~beyond;
}

void OccupancyBitmap::setPixel(int x, int y) {
    if (x < 0 || x >= width_ || y < 0 || y >= height_) return;
    std::int64_t bit = std::int64_t{y} * width_ + x;
    words_[static_cast<std::size_t>(bit / wordBits_)] |=
        std::uint64_t{1} << (wordBits_ - 1 - static_cast<int>(bit % wordBits_));
}

bool OccupancyBitmap::testPixel(int x, int y) const {
    if (x < 0 || x >= width_ || y < 0 || y >= height_) return false;
    std::int64_t bit = std::int64_t{y} * width_ + x;
    return (words_[static_cast<std::size_t>(bit / wordBits_)] >>
            (wordBits_ - 1 - static_cast<int>(bit % wordBits_))) &
           1;
}

bool OccupancyBitmap::rangeOccupied(int y, int x0, int x1) const {
    if (y < 0 || y >= height_) return false;
    x0 = std::max(x0, 0);
    x1 = std::min(x1, width_ - 1);
    if (x0 > x1) return false;

    std::int64_t b0 = std::int64_t{y} * width_ + x0;
    std::int64_t b1 = std::int64_t{y} * width_ + x1;
    std::size_t i0 = static_cast<std::size_t>(b0 / wordBits_);
    std::size_t i1 = static_cast<std::size_t>(b1 / wordBits_);
    int o0 = static_cast<int>(b0 % wordBits_);
    int o1 = static_cast<int>(b1 % wordBits_);

    if (i0 == i1) return (words_[i0] & offsetMask(o0, o1)) != 0;
    if (words_[i0] & offsetMask(o0, wordBits_ - 1)) return true;
    for (std::size_t i = i0 + 1; i < i1; ++i)
        if (words_[i]) return true;
    return (words_[i1] & offsetMask(0, o1)) != 0;
}

void OccupancyBitmap::markRange(int y, int x0, int x1) {
    if (y < 0 || y >= height_) return;
    x0 = std::max(x0, 0);
    x1 = std::min(x1, width_ - 1);
    if (x0 > x1) return;

    std::int64_t b0 = std::int64_t{y} * width_ + x0;
    std::int64_t b1 = std::int64_t{y} * width_ + x1;
    std::size_t i0 = static_cast<std::size_t>(b0 / wordBits_);
    std::size_t i1 = static_cast<std::size_t>(b1 / wordBits_);
    int o0 = static_cast<int>(b0 % wordBits_);
    int o1 = static_cast<int>(b1 % wordBits_);

    if (i0 == i1) {
        words_[i0] |= offsetMask(o0, o1);
        return;
    }
    words_[i0] |= offsetMask(o0, wordBits_ - 1);
    for (std::size_t i = i0 + 1; i < i1; ++i) words_[i] = fullMask_;
    words_[i1] |= offsetMask(0, o1);
}

bool OccupancyBitmap::rectOccupied(const PixelRect& r) const {
    PixelRect c = r.clippedTo(bounds());
    for (int y = c.y0; y <= c.y1; ++y)
        if (rangeOccupied(y, c.x0, c.x1)) return true;
    return false;
}

void OccupancyBitmap::markRect(const PixelRect& r, int minLabelHeight) {
    if (minLabelHeight < 1)
        throw std::invalid_argument("minLabelHeight must be >= 1");
    PixelRect c = r.clippedTo(bounds());
    if (c.empty()) return;
    for (int y = c.y0; y < c.y1; y += minLabelHeight) markRange(y, c.x0, c.x1);
    markRange(c.y1, c.x0, c.x1);
}

std::size_t OccupancyBitmap::countOccupied() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::string OccupancyBitmap::toPgm() const {
    std::ostringstream out;
    out << "P2\n" << width_ << ' ' << height_ << "\n1\n";
    for (int y = 0; y < height_; ++y) {
        for (int x = 0; x < width_; ++x) {
            out << (testPixel(x, y) ? '1' : '0');
            out << (x + 1 == width_ ? '\n' : ' ');
        }
    }
    return out.str();
}

}  // namespace placard
