#pragma once

// The five classical Hermitian symmetric families and their rank data.
//
//   text        algebra       ranks            coordinates
//   sp:N        sp(2N, R)     N >= 1           N
//   so*:N       so*(2N)       N >= 2           N
//   su:P,Q      su(P, Q)      1 <= P <= Q      P + Q   (two blocks)
//   so-even:N   so(2, 2N-2)   N >= 4           N
//   so-odd:N    so(2, 2N-1)   N >= 3           N

#include "diracgate/error.hpp"

#include <string>
#include <string_view>

namespace diracgate {

enum class FamilyKind { SpReal, SoStar, SU, SoEven, SoOdd };

class Family {
  public:
    static Family sp_real(int n) {
        require(n >= 1, "sp rank must be >= 1");
        return Family(FamilyKind::SpReal, n, n);
    }
    static Family so_star(int n) {
        require(n >= 2, "so* rank must be >= 2");
        return Family(FamilyKind::SoStar, n, n);
    }
    static Family su(int p, int q) {
        require(p >= 1 && q >= p, "su ranks must satisfy 1 <= P <= Q");
        return Family(FamilyKind::SU, p + q, p);
    }
    static Family so_even(int n) {
        require(n >= 4, "so-even rank must be >= 4");
        return Family(FamilyKind::SoEven, n, n);
    }
    static Family so_odd(int n) {
        require(n >= 3, "so-odd rank must be >= 3");
        return Family(FamilyKind::SoOdd, n, n);
    }

    FamilyKind kind() const { return kind_; }
    // Number of weight coordinates (p+q for su).
    int coord_count() const { return n_; }
    // Size of the left block (p for su; the full count otherwise).
    int left_block() const { return p_; }
    int right_block() const { return n_ - p_; }

    // Number of basic Schmid modules, which is also the length of a
    // coefficient vector over them.
    int basic_count() const {
        switch (kind_) {
            case FamilyKind::SpReal: return n_;
            case FamilyKind::SoStar: return n_ / 2;
            case FamilyKind::SU:     return p_;
            case FamilyKind::SoEven:
            case FamilyKind::SoOdd:  return 2;
        }
        return 0;
    }

    std::string to_string() const {
        switch (kind_) {
            case FamilyKind::SpReal: return "sp:" + std::to_string(n_);
            case FamilyKind::SoStar: return "so*:" + std::to_string(n_);
            case FamilyKind::SU:
                return "su:" + std::to_string(p_) + "," + std::to_string(n_ - p_);
            case FamilyKind::SoEven: return "so-even:" + std::to_string(n_);
            case FamilyKind::SoOdd:  return "so-odd:" + std::to_string(n_);
        }
        return "?";
    }

    // Parses "sp:N", "so*:N", "su:P,Q", "so-even:N", "so-odd:N".
    static Family parse(std::string_view text) {
        size_t colon = text.find(':');
        if (colon == std::string_view::npos)
            throw Error(ErrorKind::ParseError,
                        "bad family '" + std::string(text) + "' (expected name:rank)");
        std::string_view name = text.substr(0, colon);
        std::string_view args = text.substr(colon + 1);
        if (name == "su") {
            size_t comma = args.find(',');
            if (comma == std::string_view::npos)
                throw Error(ErrorKind::ParseError, "su needs two ranks, e.g. su:2,3");
            return su(parse_rank(args.substr(0, comma)), parse_rank(args.substr(comma + 1)));
        }
        int n = parse_rank(args);
        if (name == "sp") return sp_real(n);
        if (name == "so*") return so_star(n);
        if (name == "so-even") return so_even(n);
        if (name == "so-odd") return so_odd(n);
        throw Error(ErrorKind::ParseError, "unknown family name '" + std::string(name) + "'");
    }

    friend bool operator==(const Family& a, const Family& b) = default;

  private:
    Family(FamilyKind kind, int n, int p) : kind_(kind), n_(n), p_(p) {}

    static void require(bool ok, const char* message) {
        if (!ok) throw Error(ErrorKind::IndexOutOfRange, message);
    }

    static int parse_rank(std::string_view t) {
        if (t.empty() || t.size() > 6)
            throw Error(ErrorKind::ParseError, "bad rank '" + std::string(t) + "'");
        int value = 0;
        for (char c : t) {
            if (c < '0' || c > '9')
                throw Error(ErrorKind::ParseError, "bad rank '" + std::string(t) + "'");
            value = value * 10 + (c - '0');
        }
        return value;
    }

    FamilyKind kind_;
    int n_;
    int p_;
};

}  // namespace diracgate
