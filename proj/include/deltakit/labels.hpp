#pragma once

#include <algorithm>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "deltakit/errors.hpp"

namespace deltakit {

// Ground-set elements are named by short strings. Order is significant:
// the label sequence of a matrix is the ambient total order used for
// Pfaffian signs and lexicographically-minimal bases.
using Label = std::string;
using Labels = std::vector<Label>;

// A set of labels. Functions treat LabelSet arguments as unordered.
using LabelSet = std::vector<Label>;

inline constexpr std::string_view kAuxPrefix = "__aux";

inline bool is_aux_label(const Label& l) {
    return l.rfind(kAuxPrefix, 0) == 0;
}

inline bool contains_label(const LabelSet& s, const Label& l) {
    return std::find(s.begin(), s.end(), l) != s.end();
}

inline LabelSet sorted_set(LabelSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline bool set_equal(const LabelSet& a, const LabelSet& b) {
    return sorted_set(a) == sorted_set(b);
}

inline bool is_subset(const LabelSet& a, const LabelSet& b) {
    for (const auto& l : a)
        if (!contains_label(b, l)) return false;
    return true;
}

inline LabelSet set_minus(const LabelSet& a, const LabelSet& b) {
    LabelSet r;
    for (const auto& l : a)
        if (!contains_label(b, l)) r.push_back(l);
    return r;
}

inline LabelSet set_union(const LabelSet& a, const LabelSet& b) {
    LabelSet r = a;
    for (const auto& l : b)
        if (!contains_label(r, l)) r.push_back(l);
    return r;
}

inline LabelSet set_intersect(const LabelSet& a, const LabelSet& b) {
    LabelSet r;
    for (const auto& l : a)
        if (contains_label(b, l)) r.push_back(l);
    return r;
}

inline LabelSet set_symdiff(const LabelSet& a, const LabelSet& b) {
    LabelSet r = set_minus(a, b);
    for (const auto& l : b)
        if (!contains_label(a, l)) r.push_back(l);
    return r;
}

inline void require_distinct(const Labels& ls, const char* what) {
    Labels s = ls;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw ValidationError(std::string(what) + ": duplicate labels");
}

// Fresh auxiliary labels, numbered past every __aux<k> already in scope so
// that compositions of generated representations never collide.
inline Labels fresh_aux_labels(const std::vector<const Labels*>& in_scope, int count) {
    std::uint64_t next = 0;
    for (const Labels* ls : in_scope) {
        for (const Label& l : *ls) {
            if (!is_aux_label(l)) continue;
            std::string_view digits = std::string_view(l).substr(kAuxPrefix.size());
            std::uint64_t k = 0;
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
            if (ec == std::errc() && ptr == digits.data() + digits.size() && k + 1 > next)
                next = k + 1;
        }
    }
    Labels out;
    out.reserve(count);
    for (int i = 0; i < count; ++i)
        out.push_back(std::string(kAuxPrefix) + std::to_string(next + i));
    return out;
}

} // namespace deltakit
