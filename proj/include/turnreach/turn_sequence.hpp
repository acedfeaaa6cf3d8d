#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace turnreach {

enum class Turn : std::uint8_t { L, R };

inline Turn opposite(Turn t) { return t == Turn::L ? Turn::R : Turn::L; }

inline char to_char(Turn t) { return t == Turn::L ? 'L' : 'R'; }

struct ParseError : std::runtime_error {
    std::size_t position; // 0-based offset of the offending character
    explicit ParseError(std::size_t pos)
        : std::runtime_error("invalid character at position " + std::to_string(pos)),
          position(pos) {}
};

// Word over {L, R}. Segment k of any realization carries prefix number
// delta_k; the chain has n+1 segments for n turns.
class TurnSequence {
public:
    TurnSequence() = default;
    explicit TurnSequence(std::vector<Turn> turns) : turns_(std::move(turns)) {}

    static TurnSequence parse(const std::string& text) {
        std::vector<Turn> ts;
        ts.reserve(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            char c = text[i];
            if (c == 'L' || c == 'l')
                ts.push_back(Turn::L);
            else if (c == 'R' || c == 'r')
                ts.push_back(Turn::R);
            else
                throw ParseError(i);
        }
        return TurnSequence(std::move(ts));
    }

    const std::vector<Turn>& turns() const { return turns_; }
    std::size_t size() const { return turns_.size(); }
    bool empty() const { return turns_.empty(); }

    // 1-based access matching the sigma_1..sigma_n convention.
    Turn at(std::size_t i) const { return turns_.at(i - 1); }

    int count_l() const {
        int l = 0;
        for (Turn t : turns_)
            if (t == Turn::L) ++l;
        return l;
    }
    int count_r() const { return static_cast<int>(size()) - count_l(); }
    int excess() const { return 2 * count_l() - static_cast<int>(size()); }

    std::string str() const {
        std::string s;
        s.reserve(size());
        for (Turn t : turns_) s.push_back(to_char(t));
        return s;
    }

    TurnSequence sub(std::size_t first, std::size_t last) const { // 1-based, inclusive
        if (first > last + 1 || last > size()) throw std::out_of_range("sub");
        if (first > last) return TurnSequence{};
        return TurnSequence(std::vector<Turn>(turns_.begin() + first - 1, turns_.begin() + last));
    }

    bool operator==(const TurnSequence&) const = default;

private:
    std::vector<Turn> turns_;
};

// Axis directions named by compass; value mod 4 matches delta mod 4.
enum class Axis : std::uint8_t { PlusX = 0, PlusY = 1, MinusX = 2, MinusY = 3 };

inline Axis axis_of_delta(int delta) {
    int r = delta % 4;
    if (r < 0) r += 4;
    return static_cast<Axis>(r);
}

inline const char* axis_name(Axis a) {
    switch (a) {
        case Axis::PlusX: return "+x";
        case Axis::PlusY: return "+y";
        case Axis::MinusX: return "-x";
        case Axis::MinusY: return "-y";
    }
    return "?";
}

// Prefix excess numbers delta_0..delta_n and the direction of each segment.
struct PrefixProfile {
    std::vector<int> deltas;     // length n+1
    std::vector<Axis> directions; // length n+1, directions[k] = axis of segment k

    static PrefixProfile of(const TurnSequence& s) {
        PrefixProfile p;
        p.deltas.reserve(s.size() + 1);
        p.directions.reserve(s.size() + 1);
        int d = 0;
        p.deltas.push_back(0);
        p.directions.push_back(Axis::PlusX);
        for (Turn t : s.turns()) {
            d += (t == Turn::L) ? 1 : -1;
            p.deltas.push_back(d);
            p.directions.push_back(axis_of_delta(d));
        }
        return p;
    }
};

enum class HookDir : std::uint8_t { Up, Down, Left, Right };
enum class HookKind : std::uint8_t { LL, RR };

inline const char* hook_dir_name(HookDir d) {
    switch (d) {
        case HookDir::Up: return "up";
        case HookDir::Down: return "down";
        case HookDir::Left: return "left";
        case HookDir::Right: return "right";
    }
    return "?";
}

// Two consecutive equal turns; the middle segment (index i, prefix number
// delta_i) is the hook segment and fixes the direction class.
struct Hook {
    std::size_t index; // 1-based position i with sigma_i == sigma_{i+1}
    HookDir dir;
    HookKind kind;

    bool operator==(const Hook&) const = default;
};

inline HookDir hook_dir_of_axis(Axis a) {
    switch (a) {
        case Axis::PlusX: return HookDir::Right;
        case Axis::PlusY: return HookDir::Up;
        case Axis::MinusX: return HookDir::Left;
        case Axis::MinusY: return HookDir::Down;
    }
    return HookDir::Right;
}

inline Axis axis_of_hook_dir(HookDir d) {
    switch (d) {
        case HookDir::Right: return Axis::PlusX;
        case HookDir::Up: return Axis::PlusY;
        case HookDir::Left: return Axis::MinusX;
        case HookDir::Down: return Axis::MinusY;
    }
    return Axis::PlusX;
}

inline std::vector<Hook> find_hooks(const TurnSequence& s) {
    std::vector<Hook> hooks;
    if (s.size() < 2) return hooks;
    PrefixProfile p = PrefixProfile::of(s);
    for (std::size_t i = 1; i + 1 <= s.size(); ++i) {
        if (s.at(i) != s.at(i + 1)) continue;
        Hook h;
        h.index = i;
        h.dir = hook_dir_of_axis(p.directions[i]);
        h.kind = (s.at(i) == Turn::L) ? HookKind::LL : HookKind::RR;
        hooks.push_back(h);
    }
    return hooks;
}

inline bool has_hook_dir(const TurnSequence& s, HookDir d) {
    for (const Hook& h : find_hooks(s))
        if (h.dir == d) return true;
    return false;
}

inline bool is_staircase(const TurnSequence& s) { return find_hooks(s).empty(); }

// m^o_z / m^p_z and the staircase measures, all derived from segment
// directions alone. Counts of z2-segments follow the (z1,z2) order of the
// subscripted measure.
struct Measures {
    int mono_o[4] = {0, 0, 0, 0};
    int mono_p[4] = {0, 0, 0, 0};
    int stair_o[4][4] = {};
    int stair_p[4][4] = {};

    int mo(Axis z) const { return mono_o[static_cast<int>(z)]; }
    int mp(Axis z) const { return mono_p[static_cast<int>(z)]; }
    int so(Axis z1, Axis z2) const { return stair_o[static_cast<int>(z1)][static_cast<int>(z2)]; }
    int sp(Axis z1, Axis z2) const { return stair_p[static_cast<int>(z1)][static_cast<int>(z2)]; }
};

inline Axis axis_opposite(Axis a) { return static_cast<Axis>((static_cast<int>(a) + 2) % 4); }

inline Measures measures(const TurnSequence& s) {
    PrefixProfile p = PrefixProfile::of(s);
    const auto& dir = p.directions;
    const std::size_t m = dir.size();
    Measures out;

    for (int zi = 0; zi < 4; ++zi) {
        Axis z = static_cast<Axis>(zi);
        Axis bad = axis_opposite(z);
        int count = 0;
        for (std::size_t k = 0; k < m && dir[k] != bad; ++k)
            if (dir[k] == z) ++count;
        out.mono_o[zi] = count;
        count = 0;
        for (std::size_t k = m; k-- > 0 && dir[k] != bad;)
            if (dir[k] == z) ++count;
        out.mono_p[zi] = count;
    }

    for (int z1i = 0; z1i < 4; ++z1i) {
        for (int z2i = 0; z2i < 4; ++z2i) {
            if (z1i % 2 == z2i % 2) continue; // need orthogonal pair
            Axis z1 = static_cast<Axis>(z1i), z2 = static_cast<Axis>(z2i);
            int count = 0;
            for (std::size_t k = 0; k < m && (dir[k] == z1 || dir[k] == z2); ++k)
                if (dir[k] == z2) ++count;
            out.stair_o[z1i][z2i] = count;
            count = 0;
            for (std::size_t k = m; k-- > 0 && (dir[k] == z1 || dir[k] == z2);)
                if (dir[k] == z2) ++count;
            out.stair_p[z1i][z2i] = count;
        }
    }
    return out;
}

// i(w): last index with delta_i == w; j(w): first. Indices run over 0..n.
struct BoundaryIndices {
    std::size_t last;  // i(w)
    std::size_t first; // j(w)
};

inline std::optional<BoundaryIndices> boundary_indices(const TurnSequence& s, int w) {
    PrefixProfile p = PrefixProfile::of(s);
    std::optional<std::size_t> first, last;
    for (std::size_t k = 0; k < p.deltas.size(); ++k) {
        if (p.deltas[k] == w) {
            if (!first) first = k;
            last = k;
        }
    }
    if (!first) return std::nullopt;
    return BoundaryIndices{*last, *first};
}

enum class TransformKind { ReverseComplement, Mirror, DropLast };

inline TurnSequence reverse_complement(const TurnSequence& s) {
    std::vector<Turn> out;
    out.reserve(s.size());
    for (std::size_t i = s.size(); i-- > 0;) out.push_back(opposite(s.turns()[i]));
    return TurnSequence(std::move(out));
}

inline TurnSequence mirror(const TurnSequence& s) {
    std::vector<Turn> out;
    out.reserve(s.size());
    for (Turn t : s.turns()) out.push_back(opposite(t));
    return TurnSequence(std::move(out));
}

inline TurnSequence reverse(const TurnSequence& s) {
    std::vector<Turn> out(s.turns().rbegin(), s.turns().rend());
    return TurnSequence(std::move(out));
}

inline TurnSequence prepend(const TurnSequence& s, Turn t) {
    std::vector<Turn> out;
    out.reserve(s.size() + 1);
    out.push_back(t);
    out.insert(out.end(), s.turns().begin(), s.turns().end());
    return TurnSequence(std::move(out));
}

struct EmptySequenceError : std::runtime_error {
    EmptySequenceError() : std::runtime_error("drop_last on empty sequence") {}
};

inline TurnSequence drop_last(const TurnSequence& s) {
    if (s.empty()) throw EmptySequenceError{};
    std::vector<Turn> out(s.turns().begin(), s.turns().end() - 1);
    return TurnSequence(std::move(out));
}

inline TurnSequence append(const TurnSequence& s, Turn t) {
    std::vector<Turn> out = s.turns();
    out.push_back(t);
    return TurnSequence(std::move(out));
}

} // namespace turnreach
