#pragma once

#include <array>
#include <utility>
#include <vector>

namespace qorbit {

// A word is a sequence of generator indices; the empty word is the unit.
using Word = std::vector<int>;

// length-then-lex; the canonical term order everywhere
struct DegLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

struct PairDegLex {
    bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const {
        DegLex lt;
        if (a.first != b.first) return lt(a.first, b.first);
        return lt(a.second, b.second);
    }
};

struct TripleDegLex {
    bool operator()(const std::array<Word, 3>& a, const std::array<Word, 3>& b) const {
        DegLex lt;
        for (int i = 0; i < 3; ++i)
            if (a[i] != b[i]) return lt(a[i], b[i]);
        return false;
    }
};

inline Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

} // namespace qorbit
