#include "dyckpaint/xvector.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace dyckpaint {

XVector XVector::from_tokens(const std::vector<int>& f) {
    std::vector<int> x(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i > 0 && f[i] < f[i - 1]) {
            throw std::invalid_argument("token sequence must be weakly increasing");
        }
        x[i] = f[i] - static_cast<int>(i + 1);
    }
    return XVector(std::move(x));
}

XVector XVector::parse(std::string_view text) {
    std::vector<int> entries;
    std::size_t pos = 0;
    if (text.empty()) return XVector{};
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view piece =
            text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (ec != std::errc() || ptr != piece.data() + piece.size()) {
            throw std::invalid_argument("malformed vector entry: '" + std::string(piece) + "'");
        }
        entries.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return XVector(std::move(entries));
}

int XVector::at(int i) const {
    if (i < 1 || i > size()) throw std::out_of_range("XVector index out of range");
    return entries_[static_cast<std::size_t>(i - 1)];
}

bool XVector::is_reduced() const {
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i - 1] > entries_[i]) return false;
    }
    return true;
}

XVector XVector::reduced() const {
    std::vector<int> r = entries_;
    for (int i = static_cast<int>(r.size()) - 2; i >= 0; --i) {
        r[static_cast<std::size_t>(i)] =
            std::min(r[static_cast<std::size_t>(i)], r[static_cast<std::size_t>(i) + 1]);
    }
    return XVector(std::move(r));
}

std::pair<XVector, XVector> XVector::branch(int i) const {
    if (i < 1 || i > size()) throw std::out_of_range("branch index out of range");
    std::vector<int> down = entries_;
    for (std::size_t j = static_cast<std::size_t>(i - 1); j < down.size(); ++j) down[j] -= 1;
    std::vector<int> up;
    up.reserve(entries_.size() - 1);
    for (std::size_t j = 0; j < entries_.size(); ++j) {
        if (j != static_cast<std::size_t>(i - 1)) up.push_back(entries_[j]);
    }
    return {XVector(std::move(down)), XVector(std::move(up))};
}

bool XVector::dominated_entrywise_by(const XVector& y) const {
    if (size() != y.size()) return false;
    for (int i = 0; i < size(); ++i) {
        if (entries_[static_cast<std::size_t>(i)] > y.entries_[static_cast<std::size_t>(i)]) return false;
    }
    return true;
}

std::string XVector::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out << ',';
        out << entries_[i];
    }
    return out.str();
}

} // namespace dyckpaint
